#include "commute/matfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "commute/linalg.hpp"

namespace commute {

ContourSpec ContourSpec::enclosing(const std::vector<std::pair<double, double>>& ranges,
                                   int nodes, double pad_factor) {
    ContourSpec spec;
    spec.nodes = nodes;
    for (const auto& [lo, hi] : ranges) {
        ContourCircle c;
        c.center = Complex{0.5 * (lo + hi), 0.0};
        c.radius = std::max(1.0, pad_factor * 0.5 * (hi - lo));
        spec.circles.push_back(c);
    }
    return spec;
}

void ContourSpec::validate(const std::vector<std::vector<double>>& enclosed) const {
    if (nodes < 32) throw InvalidArgument("contour quadrature needs at least 32 nodes");
    if (enclosed.size() != circles.size())
        throw DimensionMismatch("one list of enclosed values per circle expected");
    for (std::size_t r = 0; r < circles.size(); ++r) {
        const auto& c = circles[r];
        if (c.radius <= 0.0) throw InvalidArgument("contour radius must be positive");
        for (double x : enclosed[r]) {
            const double margin = c.radius - std::abs(Complex{x, 0.0} - c.center);
            if (margin < c.radius / 10.0)
                throw ContourTooClose("value " + std::to_string(x) + " within " +
                                      std::to_string(margin) + " of circle " + std::to_string(r + 1));
        }
    }
}

HermitianMatrix eval_matfun(const ScalarFunction& f, const CommutingTuple& s,
                            const TolerancePolicy& tol, std::uint64_t seed) {
    tol.validate();
    if (f.arity() != s.count())
        throw DimensionMismatch("function arity " + std::to_string(f.arity()) +
                                " does not match tuple size " + std::to_string(s.count()));
    const JointEigenTable table = joint_eigentable(s, seed);
    const std::size_t n = s.dim();

    for (const auto& x : table.eigs) {
        if (!f.domain().contains(x)) {
            std::string pt = "(";
            for (std::size_t r = 0; r < x.size(); ++r)
                pt += (r ? "," : "") + std::to_string(x[r]);
            throw SpectrumOutsideDomain("joint eigenvalue " + pt + ") outside the function domain");
        }
    }

    Matrix fd(n, n);
    for (std::size_t i = 0; i < n; ++i) fd(i, i) = f(table.eigs[i]);
    return HermitianMatrix(table.u * fd * table.u.adjoint());
}

HermitianMatrix eval_poly_direct(const Polynomial& p, const CommutingTuple& s) {
    if (p.arity() != s.count())
        throw DimensionMismatch("polynomial arity does not match tuple size");
    const std::size_t n = s.dim();
    const int d = s.count();

    // powers[r][k] = (S^r)^k, built up to the degree actually used
    std::vector<std::vector<Matrix>> powers(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) powers[static_cast<std::size_t>(r)].push_back(Matrix::identity(n));
    auto power = [&](int r, int k) -> const Matrix& {
        auto& ladder = powers[static_cast<std::size_t>(r)];
        while (static_cast<int>(ladder.size()) <= k)
            ladder.push_back(ladder.back() * s.component(r).mat());
        return ladder[static_cast<std::size_t>(k)];
    };

    Matrix acc(n, n);
    for (const auto& [e, c] : p.terms()) {
        Matrix term = Matrix::identity(n);
        for (int r = 0; r < d; ++r)
            if (e[static_cast<std::size_t>(r)] > 0) term = term * power(r, e[static_cast<std::size_t>(r)]);
        acc += c * term;
    }
    return HermitianMatrix(acc);
}

namespace {

// Nested trapezoid sums, innermost variable first:
//   G_r(prefix) = sum_k w_{r,k} R_r(k) * G_{r+1}(prefix + zeta_{r,k})
// with w = rho e^{i theta} / N absorbing both dzeta and the 1/(2 pi i).
Matrix contour_level(const ScalarFunction& f, const ContourSpec& spec,
                     const std::vector<std::vector<Matrix>>& resolvents,
                     const std::vector<std::vector<Complex>>& zetas,
                     std::vector<Complex>& prefix, std::size_t level, std::size_t n) {
    const int big_n = spec.nodes;
    Matrix acc(n, n);
    const auto& circle = spec.circles[level];
    for (int k = 0; k < big_n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / big_n;
        const Complex w = circle.radius * std::polar(1.0, theta) / static_cast<double>(big_n);
        prefix[level] = zetas[level][static_cast<std::size_t>(k)];
        if (level + 1 == spec.circles.size()) {
            const Complex fz = f.eval_complex(prefix);
            acc += (w * fz) * resolvents[level][static_cast<std::size_t>(k)];
        } else {
            Matrix inner = contour_level(f, spec, resolvents, zetas, prefix, level + 1, n);
            acc += w * (resolvents[level][static_cast<std::size_t>(k)] * inner);
        }
    }
    return acc;
}

}  // namespace

HermitianMatrix eval_contour(const ScalarFunction& f, const CommutingTuple& s,
                             const ContourSpec& spec) {
    if (f.arity() != s.count() || static_cast<int>(spec.circles.size()) != s.count())
        throw DimensionMismatch("function, tuple, and contour dimensions must agree");
    if (!f.has_complex()) throw NotAnalytic("contour evaluation needs an analytic extension");
    const std::size_t n = s.dim();
    const int d = s.count();

    std::vector<std::vector<double>> eigs_per_var;
    for (int r = 0; r < d; ++r)
        eigs_per_var.push_back(eig_hermitian(s.component(r).mat()).values);
    spec.validate(eigs_per_var);

    std::vector<std::vector<Matrix>> resolvents(static_cast<std::size_t>(d));
    std::vector<std::vector<Complex>> zetas(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        const auto& circle = spec.circles[static_cast<std::size_t>(r)];
        for (int k = 0; k < spec.nodes; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / spec.nodes;
            const Complex zeta = circle.center + circle.radius * std::polar(1.0, theta);
            double dmin = 1e300, dmax = 0.0;
            for (double lam : eigs_per_var[static_cast<std::size_t>(r)]) {
                const double dist = std::abs(zeta - Complex{lam, 0.0});
                dmin = std::min(dmin, dist);
                dmax = std::max(dmax, dist);
            }
            if (dmin <= 0.0 || dmax / dmin > 1e12)
                throw ResolventIllConditioned("resolvent condition number above 1e12 at a node");
            Matrix zi = Matrix::identity(n) * zeta - s.component(r).mat();
            resolvents[static_cast<std::size_t>(r)].push_back(inverse(zi));
            zetas[static_cast<std::size_t>(r)].push_back(zeta);
        }
    }

    std::vector<Complex> prefix(static_cast<std::size_t>(d));
    Matrix result = contour_level(f, spec, resolvents, zetas, prefix, 0, n);
    return HermitianMatrix(result);
}

}  // namespace commute
