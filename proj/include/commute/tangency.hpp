#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commute/joint_diag.hpp"
#include "commute/types.hpp"

namespace commute {

/// The data attached to an accepted tangent direction at a base point:
/// Gamma^r = U* Delta^r U, its group-block-diagonal part, and the
/// skew-Hermitian generator Y built from difference quotients.
struct TangentData {
    CommutingTuple base;
    SelfAdjointTuple direction;
    JointDiagonalization diag;
    std::vector<Matrix> gamma;        // Gamma^r, Hermitian
    std::vector<Matrix> gamma_tilde;  // block-diagonal per the grouping
    Matrix y;                         // skew-Hermitian, zero inside groups

    std::size_t dim() const { return base.dim(); }
    int count() const { return base.count(); }
};

struct TangencyResult {
    bool tangent = false;
    /// max over pairs (r,s) of ||[D^r,Gamma^s] - [D^s,Gamma^r]||_max,
    /// divided by (1+||S||)(1+||Delta||).
    double residual_first = 0.0;
    /// max over pairs of ||[GammaTilde^r, GammaTilde^s]||_max, same scaling.
    double residual_second = 0.0;
    double scale = 1.0;
    std::optional<TangentData> data;                // only on acceptance
    std::vector<AmbiguousPair> grouping_ambiguities;
};

/// Decide whether Delta is tangent to the commuting variety at S:
/// [D^r, Gamma^s] = [D^s, Gamma^r] and [GammaTilde^r, GammaTilde^s] = 0
/// for all pairs. Always returns a verdict with residuals.
TangencyResult tangency_check(const CommutingTuple& s, const SelfAdjointTuple& delta,
                              const TolerancePolicy& tol = {}, std::uint64_t seed = kDefaultSeed);

/// e^A for skew-Hermitian A, via the eigendecomposition of the Hermitian
/// matrix -iA. Result is unitary to machine precision.
Matrix matrix_exponential(const Matrix& skew);

/// The constructive curve S^r(t) = U e^{Yt} [D^r + t GammaTilde^r] e^{-Yt} U*
/// realizing an accepted tangent direction: S(0) = S, S'(0) = Delta, and
/// S(t) stays pairwise-commuting for every t. Closed-form derivatives of
/// all orders are available.
class WitnessCurve {
public:
    explicit WitnessCurve(TangentData td);

    SelfAdjointTuple operator()(double t) const;
    SelfAdjointTuple derivative(double t, int order) const;
    const TangentData& data() const { return td_; }

private:
    Matrix exp_yt(double t) const;

    TangentData td_;
    Matrix y_basis_;                 // Y = y_basis * diag(i*phase) * y_basis^*
    std::vector<double> y_phase_;
};

WitnessCurve witness_curve(const TangentData& td);

}  // namespace commute
