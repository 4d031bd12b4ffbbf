#pragma once

#include <cstdint>

#include "commute/curve.hpp"
#include "commute/scalar_function.hpp"
#include "commute/tangency.hpp"
#include "commute/types.hpp"

namespace commute {

/// d/dt F(S(t)) at a point, from tangent data:
///   U ( sum_r GammaTilde^r df/dx^r(D) + [Y, F(D)] ) U*.
HermitianMatrix df_from_tangent(const TangentData& td, const ScalarFunction& f);

/// The derivative map DF(S, Delta) on tangent directions. Throws NotTangent
/// when the pair fails the tangency check.
HermitianMatrix df_map(const CommutingTuple& s, const SelfAdjointTuple& delta,
                       const ScalarFunction& f, const TolerancePolicy& tol = {},
                       std::uint64_t seed = kDefaultSeed);

/// Entrywise form of the same derivative:
///   sum_r Gamma^r_ij df/dx^r(x_i)                     when x_i = x_j,
///   Gamma^q_ij (f(x_i) - f(x_j)) / (x_i^q - x_j^q)    otherwise,
/// conjugated by U. Algebraically identical to df_from_tangent; kept as an
/// independently coded route for cross-checking.
HermitianMatrix derivative_entrywise(const TangentData& td, const ScalarFunction& f);

/// Derivative of F along a curve at t*. The curve velocity (analytic or
/// finite-difference) must pass the tangency check at S(t*).
HermitianMatrix derivative_along_curve(const ScalarFunction& f, const CurveSpec& curve,
                                       double tstar, const TolerancePolicy& tol = {},
                                       std::uint64_t seed = kDefaultSeed);

/// Explicit a-priori bound 2 d n^3 M max_{s, x in E} |df/dx^s(x)| with M the
/// largest Gamma entry; dominates the operator norm of the derivative.
double derivative_bound(const TangentData& td, const ScalarFunction& f, const Rectangle& e,
                        int grid_per_axis = 0);

/// Central-difference oracle (F(S(t+h)) - F(S(t-h))) / 2h through the
/// matrix-function evaluator.
HermitianMatrix fd_derivative_oracle(const ScalarFunction& f, const CurveSpec& curve,
                                     double tstar, double h, const TolerancePolicy& tol = {},
                                     std::uint64_t seed = kDefaultSeed);

/// Richardson-extrapolated variant: (4 D(h/2) - D(h)) / 3.
HermitianMatrix fd_derivative_richardson(const ScalarFunction& f, const CurveSpec& curve,
                                         double tstar, double h, const TolerancePolicy& tol = {},
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace commute
