#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "commute/curve.hpp"
#include "commute/joint_diag.hpp"
#include "commute/types.hpp"

namespace commute {

/// Joint-eigenvalue paths of a sampled curve, stitched by per-step
/// bottleneck assignments (minimize the maximum displacement, ties broken
/// by the smaller total displacement).
struct EigenPathBundle {
    std::vector<double> grid;
    /// paths[i][k] = position of labeled eigenvalue i at grid[k], in R^d.
    std::vector<std::vector<std::vector<double>>> paths;
    /// assignments[k][i] = index (into the sorted table at grid[k+1]) that
    /// path i moves to across step k.
    std::vector<std::vector<int>> assignments;
    /// max over steps of max_i ||x_i(t_{k+1}) - x_i(t_k)||_inf / dt.
    double lipschitz_estimate = 0.0;
    /// per-sample tolerance-sensitive pairs (never thrown while tracking)
    std::vector<std::vector<AmbiguousPair>> sample_ambiguities;
};

EigenPathBundle track_eigenvalues(const CurveSpec& curve, std::span<const double> grid,
                                  const TolerancePolicy& tol = {},
                                  std::uint64_t seed = kDefaultSeed);

/// The classical smooth 2x2 curve whose eigenvalues are +-exp(-1/t^2) but
/// whose eigenvectors oscillate without limit as t -> 0; zero matrix at 0.
HermitianMatrix rellich_fixture(double t);

struct StepAngleReport {
    double t0 = 0.0, t1 = 0.0;
    std::vector<double> angles;   // per path, principal angle to the matched group subspace
    double max_angle = 0.0;
    double angle_rate = 0.0;      // max_angle / dt
    double eig_rate = 0.0;        // max displacement / dt
    bool flagged = false;
};

struct DiscontinuityReport {
    std::vector<StepAngleReport> steps;
    double lipschitz_estimate = 0.0;
    double ratio_threshold = 0.0;
};

/// Per-step principal angles between matched eigenspaces; a step is flagged
/// when the angle rate exceeds ratio_threshold times the eigenvalue
/// Lipschitz estimate while the eigenvalue motion itself stays Lipschitz.
DiscontinuityReport eigenvector_discontinuity_report(const CurveSpec& curve,
                                                     std::span<const double> grid,
                                                     const TolerancePolicy& tol = {},
                                                     std::uint64_t seed = kDefaultSeed,
                                                     double ratio_threshold = 10.0);

/// Exact bottleneck assignment on an n x n cost matrix; among assignments
/// achieving the optimal bottleneck, the one with the smallest sum cost is
/// returned. Exhaustive-checkable for small n.
std::vector<int> bottleneck_assignment(const std::vector<std::vector<double>>& cost,
                                       double* bottleneck_out = nullptr);

}  // namespace commute
