#pragma once

#include <functional>
#include <vector>

#include "commute/scalar_function.hpp"
#include "commute/tangency.hpp"
#include "commute/types.hpp"

namespace commute {

/// A parametrized curve of self-adjoint tuples. Every sampled tuple is
/// expected to pairwise commute; consumers validate where needed. When no
/// analytic derivative evaluator is supplied, central finite-difference
/// stencils of width 2*ceil(l/2)+1 with step h = eps^{1/(l+2)} (1+|t|)
/// stand in.
struct CurveSpec {
    std::function<SelfAdjointTuple(double)> eval;
    std::function<SelfAdjointTuple(double, int)> analytic_derivative;  // may be empty
    Interval domain;
    int smoothness = 1;

    SelfAdjointTuple operator()(double t) const;
    bool has_analytic_derivatives() const { return static_cast<bool>(analytic_derivative); }

    /// order >= 1; order 0 returns the sample itself.
    SelfAdjointTuple derivative(double t, int order) const;
};

/// Wrap a witness curve (closed-form derivatives of every order).
CurveSpec make_witness_curve(const WitnessCurve& w);

/// S(t) = (1-t) A + t B.
CurveSpec make_linear_curve(const SelfAdjointTuple& a, const SelfAdjointTuple& b);

/// Diagonal tuple with polynomial-in-t entries: coeffs[r][i][k] multiplies
/// t^k in diagonal entry i of component r. Trivially commuting.
CurveSpec make_poly_diag_curve(const std::vector<std::vector<std::vector<double>>>& coeffs);

/// The oscillating 2x2 fixture paired with a constant second component
/// c * I, forming a curve of commuting pairs.
CurveSpec make_rellich_pair_curve(double c = 0.0);

}  // namespace commute
