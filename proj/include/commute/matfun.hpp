#pragma once

#include <cstdint>
#include <vector>

#include "commute/joint_diag.hpp"
#include "commute/scalar_function.hpp"
#include "commute/types.hpp"

namespace commute {

/// One quadrature circle per variable. Trapezoid rule on circles converges
/// exponentially for periodic analytic integrands.
struct ContourCircle {
    Complex center{0.0, 0.0};
    double radius = 1.0;
};

struct ContourSpec {
    std::vector<ContourCircle> circles;
    int nodes = 128;  // N >= 32

    /// Circle per variable centered on the given real ranges, padded so the
    /// enclosed points sit well inside (margin >= radius/10 with room to
    /// spare, which keeps the quadrature error far below the tolerances).
    static ContourSpec enclosing(const std::vector<std::pair<double, double>>& ranges,
                                 int nodes = 128, double pad_factor = 1.8);

    /// Throws ContourTooClose unless each value is strictly inside its
    /// circle with margin >= radius/10; throws InvalidArgument for N < 32.
    void validate(const std::vector<std::vector<double>>& enclosed_per_variable) const;
};

/// F(S) = U diag(f(x_1), ..., f(x_n)) U* through the joint eigenbasis.
HermitianMatrix eval_matfun(const ScalarFunction& f, const CommutingTuple& s,
                            const TolerancePolicy& tol = {}, std::uint64_t seed = kDefaultSeed);

/// Direct oracle: sum of c_alpha (S^1)^{a_1} ... (S^d)^{a_d} by repeated
/// multiplication (monomial order immaterial on a commuting tuple).
HermitianMatrix eval_poly_direct(const Polynomial& p, const CommutingTuple& s);

/// Cauchy-integral oracle for analytic f:
/// (2 pi i)^{-d} contour integral of f(z) prod_r (z^r I - S^r)^{-1}.
/// Resolvents go through LU inversion, independent of the spectral route.
HermitianMatrix eval_contour(const ScalarFunction& f, const CommutingTuple& s,
                             const ContourSpec& c);

}  // namespace commute
