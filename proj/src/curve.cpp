#include "commute/curve.hpp"

#include <cmath>
#include <limits>

#include "commute/spectral_flow.hpp"

namespace commute {

SelfAdjointTuple CurveSpec::operator()(double t) const {
    if (!domain.contains(t) && t != domain.lo && t != domain.hi)
        throw CurveDomainExceeded("curve evaluated at t = " + std::to_string(t) +
                                  " outside its domain");
    return eval(t);
}

SelfAdjointTuple CurveSpec::derivative(double t, int order) const {
    if (order < 0) throw InvalidArgument("derivative order must be nonnegative");
    if (order == 0) return (*this)(t);
    if (analytic_derivative) return analytic_derivative(t, order);

    const double eps = std::numeric_limits<double>::epsilon();
    const double h = std::pow(eps, 1.0 / (order + 2)) * (1.0 + std::abs(t));
    const int half = (order + 1) / 2;

    // central stencil coefficients, second-order accurate
    std::vector<std::pair<int, double>> stencil;
    switch (order) {
        case 1: stencil = {{-1, -0.5}, {1, 0.5}}; break;
        case 2: stencil = {{-1, 1.0}, {0, -2.0}, {1, 1.0}}; break;
        case 3: stencil = {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}; break;
        case 4: stencil = {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}; break;
        default: throw OrderTooHigh("finite-difference curve derivatives available up to order 4");
    }
    if (!domain.contains(t - half * h) || !domain.contains(t + half * h))
        throw CurveDomainExceeded("finite-difference stencil leaves the curve domain");

    const SelfAdjointTuple probe = eval(t);
    SelfAdjointTuple acc = SelfAdjointTuple::zero(probe.dim(), probe.count());
    for (auto [k, c] : stencil)
        acc = tuple_add(acc, tuple_scale(c, eval(t + k * h)));
    return tuple_scale(1.0 / std::pow(h, order), acc);
}

CurveSpec make_witness_curve(const WitnessCurve& w) {
    CurveSpec c;
    c.eval = [w](double t) { return w(t); };
    c.analytic_derivative = [w](double t, int order) { return w.derivative(t, order); };
    c.smoothness = 8;  // real-analytic
    return c;
}

CurveSpec make_linear_curve(const SelfAdjointTuple& a, const SelfAdjointTuple& b) {
    CurveSpec c;
    c.eval = [a, b](double t) { return tuple_add(tuple_scale(1.0 - t, a), tuple_scale(t, b)); };
    c.analytic_derivative = [a, b](double, int order) {
        if (order == 1) return tuple_sub(b, a);
        return SelfAdjointTuple::zero(a.dim(), a.count());
    };
    c.smoothness = 8;
    return c;
}

CurveSpec make_poly_diag_curve(const std::vector<std::vector<std::vector<double>>>& coeffs) {
    const int d = static_cast<int>(coeffs.size());
    if (d == 0) throw InvalidArgument("poly-diag curve needs at least one component");
    const std::size_t n = coeffs[0].size();
    for (const auto& comp : coeffs)
        if (comp.size() != n) throw DimensionMismatch("poly-diag components must share dimension");

    auto eval_at = [coeffs, n, d](double t, int order) {
        std::vector<HermitianMatrix> comps;
        comps.reserve(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& poly = coeffs[static_cast<std::size_t>(r)][i];
                double v = 0.0;
                // differentiate the monomials `order` times, then evaluate
                for (std::size_t k = static_cast<std::size_t>(order); k < poly.size(); ++k) {
                    double f = 1.0;
                    for (std::size_t q = 0; q < static_cast<std::size_t>(order); ++q)
                        f *= static_cast<double>(k - q);
                    v += poly[k] * f * std::pow(t, static_cast<double>(k - static_cast<std::size_t>(order)));
                }
                m(i, i) = v;
            }
            comps.emplace_back(m);
        }
        return SelfAdjointTuple(comps);
    };

    CurveSpec c;
    c.eval = [eval_at](double t) { return eval_at(t, 0); };
    c.analytic_derivative = [eval_at](double t, int order) { return eval_at(t, order); };
    c.smoothness = 8;
    return c;
}

CurveSpec make_rellich_pair_curve(double cval) {
    CurveSpec c;
    c.eval = [cval](double t) {
        Matrix second = cval * Matrix::identity(2);
        return SelfAdjointTuple({rellich_fixture(t), HermitianMatrix(second)});
    };
    c.smoothness = 8;  // infinitely differentiable, but no closed-form derivatives supplied
    return c;
}

}  // namespace commute
