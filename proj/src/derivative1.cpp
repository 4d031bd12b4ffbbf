#include "commute/derivative1.hpp"

#include <cmath>
#include <string>

#include "commute/linalg.hpp"
#include "commute/matfun.hpp"

namespace commute {

namespace {

void check_spectrum_in_domain(const TangentData& td, const ScalarFunction& f) {
    if (f.arity() != td.count())
        throw DimensionMismatch("function arity does not match tuple size");
    for (const auto& x : td.diag.eigs)
        if (!f.domain().contains(x))
            throw SpectrumOutsideDomain("joint eigenvalue outside the function domain");
}

std::vector<int> unit_alpha(int arity, int r) {
    std::vector<int> a(static_cast<std::size_t>(arity), 0);
    a[static_cast<std::size_t>(r)] = 1;
    return a;
}

}  // namespace

HermitianMatrix df_from_tangent(const TangentData& td, const ScalarFunction& f) {
    check_spectrum_in_domain(td, f);
    const std::size_t n = td.dim();
    const int d = td.count();
    const auto& jd = td.diag;

    Matrix inner(n, n);
    // sum_r GammaTilde^r * diag(df/dx^r(x_j)): GammaTilde is supported on
    // groups where x is constant, so the column scaling is unambiguous.
    for (int r = 0; r < d; ++r) {
        const auto alpha = unit_alpha(d, r);
        std::vector<double> g(n);
        for (std::size_t j = 0; j < n; ++j) g[j] = f.partial(alpha, jd.eigs[j]);
        const Matrix& gt = td.gamma_tilde[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inner(i, j) += gt(i, j) * g[j];
    }
    // + [Y, F(D)] = Y_ij (f(x_j) - f(x_i)) entrywise
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = f(jd.eigs[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (td.y(i, j) == Complex{0.0, 0.0}) continue;
            inner(i, j) += td.y(i, j) * (f(jd.eigs[j]) - fi);
        }
    }
    return HermitianMatrix(jd.u * inner * jd.u.adjoint());
}

HermitianMatrix df_map(const CommutingTuple& s, const SelfAdjointTuple& delta,
                       const ScalarFunction& f, const TolerancePolicy& tol, std::uint64_t seed) {
    TangencyResult res = tangency_check(s, delta, tol, seed);
    if (!res.tangent)
        throw NotTangent("direction fails the tangency conditions (residuals " +
                         std::to_string(res.residual_first) + ", " +
                         std::to_string(res.residual_second) + ")");
    return df_from_tangent(*res.data, f);
}

HermitianMatrix derivative_entrywise(const TangentData& td, const ScalarFunction& f) {
    check_spectrum_in_domain(td, f);
    const std::size_t n = td.dim();
    const int d = td.count();
    const auto& jd = td.diag;

    Matrix inner(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (jd.same_group(static_cast<int>(i), static_cast<int>(j))) {
                Complex acc{0.0, 0.0};
                for (int r = 0; r < d; ++r)
                    acc += td.gamma[static_cast<std::size_t>(r)](i, j) *
                           f.partial(unit_alpha(d, r), jd.eigs[i]);
                inner(i, j) = acc;
            } else {
                int q = 0;
                double best = 0.0;
                for (int r = 0; r < d; ++r) {
                    const double diff = std::abs(jd.eigs[i][static_cast<std::size_t>(r)] -
                                                 jd.eigs[j][static_cast<std::size_t>(r)]);
                    if (diff > jd.tol_used) {
                        q = r;
                        break;
                    }
                    if (diff > best) {
                        best = diff;
                        q = r;
                    }
                }
                const double dq = jd.eigs[i][static_cast<std::size_t>(q)] -
                                  jd.eigs[j][static_cast<std::size_t>(q)];
                inner(i, j) = td.gamma[static_cast<std::size_t>(q)](i, j) *
                              ((f(jd.eigs[i]) - f(jd.eigs[j])) / dq);
            }
        }
    }
    return HermitianMatrix(jd.u * inner * jd.u.adjoint());
}

HermitianMatrix derivative_along_curve(const ScalarFunction& f, const CurveSpec& curve,
                                       double tstar, const TolerancePolicy& tol,
                                       std::uint64_t seed) {
    const SelfAdjointTuple sample = curve(tstar);
    const CommutingTuple s = CommutingTuple::require(sample, tol);
    const SelfAdjointTuple velocity = curve.derivative(tstar, 1);

    // Finite-difference velocities carry O(h^2) truncation error, far above
    // the analytic tangency tolerance; accept accordingly.
    TolerancePolicy check_tol = tol;
    if (!curve.has_analytic_derivatives()) {
        check_tol.comm = std::max(tol.comm, 1e-7);
        check_tol.group = std::max(tol.group, check_tol.comm);
    }

    TangencyResult res = tangency_check(s, velocity, check_tol, seed);
    if (!res.tangent)
        throw NotTangent("curve velocity at t* fails the tangency conditions; the curve "
                         "does not stay inside the commuting variety to first order");
    return df_from_tangent(*res.data, f);
}

double derivative_bound(const TangentData& td, const ScalarFunction& f, const Rectangle& e,
                        int grid_per_axis) {
    check_spectrum_in_domain(td, f);
    const int d = td.count();
    const double n = static_cast<double>(td.dim());
    if (e.dim() != d) throw DimensionMismatch("bounding rectangle dimension mismatch");
    if (grid_per_axis <= 1) grid_per_axis = d <= 2 ? 101 : 31;

    double m = 0.0;
    for (const auto& g : td.gamma) m = std::max(m, g.max_abs());

    // max of the first partials over a grid on E
    double gmax = 0.0;
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    const auto total = static_cast<long>(std::pow(grid_per_axis, d));
    for (long flat = 0; flat < total; ++flat) {
        long rem = flat;
        for (int r = 0; r < d; ++r) {
            const int k = static_cast<int>(rem % grid_per_axis);
            rem /= grid_per_axis;
            const auto& side = e.sides[static_cast<std::size_t>(r)];
            x[static_cast<std::size_t>(r)] =
                side.lo + (side.hi - side.lo) * (k + 0.5) / grid_per_axis;
        }
        for (int r = 0; r < d; ++r)
            gmax = std::max(gmax, std::abs(f.partial(unit_alpha(d, r), x)));
    }
    return 2.0 * d * n * n * n * m * gmax;
}

HermitianMatrix fd_derivative_oracle(const ScalarFunction& f, const CurveSpec& curve,
                                     double tstar, double h, const TolerancePolicy& tol,
                                     std::uint64_t seed) {
    if (h <= 0.0) throw InvalidArgument("finite-difference step must be positive");
    if (!curve.domain.contains(tstar - h) || !curve.domain.contains(tstar + h))
        throw CurveDomainExceeded("finite-difference step leaves the curve domain");
    const auto plus = CommutingTuple::require(curve(tstar + h), tol);
    const auto minus = CommutingTuple::require(curve(tstar - h), tol);
    const Matrix diff = eval_matfun(f, plus, tol, seed).mat() - eval_matfun(f, minus, tol, seed).mat();
    return HermitianMatrix((0.5 / h) * diff);
}

HermitianMatrix fd_derivative_richardson(const ScalarFunction& f, const CurveSpec& curve,
                                         double tstar, double h, const TolerancePolicy& tol,
                                         std::uint64_t seed) {
    const Matrix dh = fd_derivative_oracle(f, curve, tstar, h, tol, seed).mat();
    const Matrix dh2 = fd_derivative_oracle(f, curve, tstar, 0.5 * h, tol, seed).mat();
    return HermitianMatrix((1.0 / 3.0) * (4.0 * dh2 - dh));
}

}  // namespace commute
