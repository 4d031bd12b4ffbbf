#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commute/scalar_function.hpp"
#include "commute/tangency.hpp"
#include "commute/types.hpp"

namespace commute {

/// Census-based verdicts. "certified-positive" means no violation across the
/// sample census, never a proof; refutations carry a replayable witness.
struct Certificate {
    enum class Verdict { CertifiedPositive, Refuted, Inconclusive };

    struct Witness {
        std::uint64_t draw_seed = 0;   // reproduces the instance exactly
        int sample_index = -1;
        double tstar = 0.0;            // grid point for convexity refutations
        double min_eigenvalue = 0.0;
    };

    Verdict verdict = Verdict::Inconclusive;
    double min_eigenvalue_observed = 0.0;
    std::uint64_t seed = 0;
    int samples = 0;
    std::optional<Witness> witness;

    // convexity-specific: the two routes and their margins
    std::optional<double> chord_min_eigenvalue;
    std::optional<double> second_derivative_min_eigenvalue;
    int grid_used = 0;

    static std::string verdict_name(Verdict v);
};

/// U diag(x_i^r) U* with Haar-random U and joint eigenvalues uniform in the
/// box; an optional multiplicity pattern forces repeated joint eigenvalues
/// (pattern entries sum to n).
CommutingTuple random_commuting_tuple(std::size_t n, int d, const Rectangle& box,
                                      std::uint64_t seed,
                                      const std::vector<int>* multiplicities = nullptr);

/// Sample the tangent cone at S constructively: Delta^r = U([Y,D^r] + B^r)U*
/// with random skew-Hermitian Y (vanishing on group blocks) and commuting
/// Hermitian blocks B^r. With `psd` set, the block part is shifted until
/// every component is positive semidefinite.
SelfAdjointTuple random_tangent_direction(const CommutingTuple& s, std::uint64_t seed,
                                          bool psd = false, const TolerancePolicy& tol = {},
                                          int budget = 64);

/// Pair (A, B) drawn from a common eigenbasis, so every convex combination
/// stays inside the commuting variety.
std::pair<CommutingTuple, CommutingTuple> random_commuting_segment(std::size_t n, int d,
                                                                   const Rectangle& box,
                                                                   std::uint64_t seed);

/// Local monotonicity census: sample (S, Delta) with Delta tangent and
/// componentwise PSD, evaluate DF(S, Delta), refute on an eigenvalue below
/// -psd tolerance.
Certificate check_local_monotone(const ScalarFunction& f, const Rectangle& spectrum_box,
                                 std::size_t n, int samples, std::uint64_t seed,
                                 const TolerancePolicy& tol = {});

/// Convexity along the segment S(t) = tA + (1-t)B: the second-derivative
/// route (grid on [0,1], refined until the verdict stabilizes) and the
/// chord inequality at lambda in {1/4, 1/2, 3/4} must agree.
Certificate check_convex_segment(const ScalarFunction& f, const CommutingTuple& a,
                                 const CommutingTuple& b, int grid = 11,
                                 const TolerancePolicy& tol = {},
                                 std::uint64_t seed = kDefaultSeed);

/// For accepted d=2 tangent data: max_ij |(x_i-x_j) Delta_ij - (y_i-y_j) Gamma_ij|,
/// the entrywise restatement of the first tangency condition.
double gamma_delta_relation_check(const TangentData& td);

}  // namespace commute
