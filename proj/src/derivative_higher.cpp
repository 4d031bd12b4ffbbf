#include "commute/derivative_higher.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "commute/linalg.hpp"

namespace commute {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = 1; first <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, prefix, out);
        prefix.pop_back();
    }
}

// Memoized divided differences keyed by sorted node values; the DD is
// symmetric within each variable's node list, so sorting loses nothing.
class DdCache {
public:
    explicit DdCache(const ScalarFunction& f) : f_(f) {}

    double get(std::vector<double> xs, std::vector<double> ys) {
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        const auto key = std::make_pair(xs, ys);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        DividedDifferenceRequest req;
        req.k = static_cast<int>(xs.size()) - 1;
        req.j = req.k + static_cast<int>(ys.size()) - 1;
        req.xnodes = std::move(xs);
        req.ynodes = std::move(ys);
        const double v = divided_difference(f_, req);
        cache_.emplace(key, v);
        return v;
    }

private:
    const ScalarFunction& f_;
    std::map<std::pair<std::vector<double>, std::vector<double>>, double> cache_;
};

struct FrameData {
    Matrix u;
    std::vector<double> x, y;
    std::vector<Matrix> gamma, delta;  // index i holds order i+1
};

FrameData frame_at(const CurveSpec& curve, double tstar, int l, const TolerancePolicy& tol,
                   std::uint64_t seed) {
    const SelfAdjointTuple sample = curve(tstar);
    if (sample.count() != 2)
        throw DimensionMismatch("higher derivatives are defined for curves of commuting pairs");
    const CommutingTuple st = CommutingTuple::require(sample, tol);
    const JointDiagonalization jd = joint_diagonalize(st, tol, seed, AmbiguityPolicy::Record);
    const std::size_t n = st.dim();

    FrameData fr;
    fr.u = jd.u;
    fr.x.resize(n);
    fr.y.resize(n);
    // Divided-difference nodes must be exactly equal inside a group so the
    // confluent rule engages instead of a near-zero division: snap every
    // row to its group representative.
    for (std::size_t i = 0; i < n; ++i) {
        const auto [gb, ge] = jd.groups[static_cast<std::size_t>(jd.group_of(static_cast<int>(i)))];
        (void)ge;
        fr.x[i] = jd.eigs[static_cast<std::size_t>(gb)][0];
        fr.y[i] = jd.eigs[static_cast<std::size_t>(gb)][1];
    }
    const Matrix ui = jd.u.adjoint();
    for (int i = 1; i <= l; ++i) {
        const SelfAdjointTuple der = curve.derivative(tstar, i);
        fr.gamma.push_back(ui * der.component(0).mat() * jd.u);
        fr.delta.push_back(ui * der.component(1).mat() * jd.u);
    }
    return fr;
}

void check_rectangle(const ScalarFunction& f, const FrameData& fr) {
    if (f.arity() != 2) throw DimensionMismatch("higher derivatives need a two-variable function");
    for (double x : fr.x)
        if (!f.domain().sides[0].contains(x))
            throw SpectrumOutsideDomain("x-eigenvalue outside the function domain");
    for (double y : fr.y)
        if (!f.domain().sides[1].contains(y))
            throw SpectrumOutsideDomain("y-eigenvalue outside the function domain");
}

}  // namespace

std::vector<IndexTuple> enumerate_index_tuples(int l) {
    if (l < 1 || l > kMaxDerivativeOrder)
        throw OrderTooHigh("index tuples available for 1 <= l <= " +
                           std::to_string(kMaxDerivativeOrder));
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions(l, prefix, comps);

    std::vector<IndexTuple> out;
    for (const auto& comp : comps) {
        double w = factorial(l);
        for (int part : comp) w /= factorial(part);
        for (std::size_t split = 0; split <= comp.size(); ++split) {
            IndexTuple e;
            e.left.assign(comp.begin(), comp.begin() + static_cast<long>(split));
            e.right.assign(comp.begin() + static_cast<long>(split), comp.end());
            e.weight = w;
            out.push_back(std::move(e));
        }
    }
    return out;
}

Matrix higher_derivative_core(const ScalarFunction& f, const std::vector<double>& x,
                              const std::vector<double>& y, const std::vector<Matrix>& gamma,
                              const std::vector<Matrix>& delta, int l,
                              std::vector<Matrix>* per_term) {
    const int n = static_cast<int>(x.size());
    const auto elements = enumerate_index_tuples(l);
    DdCache dds(f);

    Matrix total(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (per_term) per_term->clear();

    std::vector<int> path;  // s_1 .. s_{j+1}
    for (const auto& e : elements) {
        Matrix term(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        const int j = e.j();
        const int k = e.k();
        path.assign(static_cast<std::size_t>(j + 1), 0);

        // iterate over all paths s_1..s_{j+1} in [0,n)^{j+1}
        std::function<void(int, Complex)> walk = [&](int pos, Complex prod) {
            if (prod == Complex{0.0, 0.0}) return;
            if (pos == j + 1) {
                std::vector<double> xs, ys;
                xs.reserve(static_cast<std::size_t>(k + 1));
                ys.reserve(static_cast<std::size_t>(j - k + 1));
                for (int a = 0; a <= k; ++a) xs.push_back(x[static_cast<std::size_t>(path[static_cast<std::size_t>(a)])]);
                for (int b = k; b <= j; ++b) ys.push_back(y[static_cast<std::size_t>(path[static_cast<std::size_t>(b)])]);
                const double dd = dds.get(std::move(xs), std::move(ys));
                term(static_cast<std::size_t>(path[0]), static_cast<std::size_t>(path[static_cast<std::size_t>(j)])) +=
                    e.weight * dd * prod;
                return;
            }
            for (int s = 0; s < n; ++s) {
                path[static_cast<std::size_t>(pos)] = s;
                Complex next = prod;
                if (pos > 0) {
                    const int factor = pos - 1;  // factor between s_pos-1 and s_pos
                    const int order = factor < k ? e.left[static_cast<std::size_t>(factor)]
                                                 : e.right[static_cast<std::size_t>(factor - k)];
                    const Matrix& m = factor < k ? gamma[static_cast<std::size_t>(order - 1)]
                                                 : delta[static_cast<std::size_t>(order - 1)];
                    next *= m(static_cast<std::size_t>(path[static_cast<std::size_t>(pos - 1)]),
                              static_cast<std::size_t>(s));
                }
                walk(pos + 1, next);
            }
        };
        walk(0, Complex{1.0, 0.0});

        total += term;
        if (per_term) per_term->push_back(std::move(term));
    }
    return total;
}

HigherDerivativeTerms higher_derivative_terms(const ScalarFunction& f, const CurveSpec& curve,
                                              double tstar, int l, const TolerancePolicy& tol,
                                              std::uint64_t seed) {
    if (l < 1 || l > kMaxDerivativeOrder) throw OrderTooHigh("derivative order out of range");
    if (l > curve.smoothness)
        throw OrderTooHigh("curve smoothness " + std::to_string(curve.smoothness) +
                           " below requested order " + std::to_string(l));
    if (f.order() < l)
        throw InsufficientSmoothness("function order below requested derivative order");

    FrameData fr = frame_at(curve, tstar, l, tol, seed);
    check_rectangle(f, fr);

    HigherDerivativeTerms out;
    out.elements = enumerate_index_tuples(l);
    out.total = higher_derivative_core(f, fr.x, fr.y, fr.gamma, fr.delta, l, &out.terms);
    out.u = fr.u;
    out.x = fr.x;
    out.y = fr.y;
    return out;
}

HermitianMatrix higher_derivative(const ScalarFunction& f, const CurveSpec& curve, double tstar,
                                  int l, const TolerancePolicy& tol, std::uint64_t seed) {
    HigherDerivativeTerms t = higher_derivative_terms(f, curve, tstar, l, tol, seed);
    return HermitianMatrix(t.u * t.total * t.u.adjoint());
}

namespace {

Matrix resolvent_sum(const std::vector<IndexTuple>& elements, const Matrix& r1, const Matrix& r2,
                     const std::vector<Matrix>& sder, const std::vector<Matrix>& tder) {
    const std::size_t n = r1.rows();
    Matrix acc(n, n);
    for (const auto& e : elements) {
        Matrix m = r1;
        for (int order : e.left) m = m * sder[static_cast<std::size_t>(order - 1)] * r1;
        m = m * r2;
        for (int order : e.right) m = m * tder[static_cast<std::size_t>(order - 1)] * r2;
        acc += e.weight * m;
    }
    return acc;
}

void check_resolvent_conditioning(const std::vector<double>& eigs, Complex z) {
    double dmin = 1e300, dmax = 0.0;
    for (double lam : eigs) {
        const double dist = std::abs(z - Complex{lam, 0.0});
        dmin = std::min(dmin, dist);
        dmax = std::max(dmax, dist);
    }
    if (dmin <= 0.0 || dmax / dmin > 1e12)
        throw ResolventIllConditioned("resolvent condition number above 1e12");
}

}  // namespace

Matrix resolvent_product_derivative(const CurveSpec& curve, double tstar, int l, Complex z1,
                                    Complex z2, const TolerancePolicy& tol) {
    if (l < 1 || l > kMaxDerivativeOrder) throw OrderTooHigh("derivative order out of range");
    const SelfAdjointTuple sample = curve(tstar);
    if (sample.count() != 2)
        throw DimensionMismatch("resolvent products are defined for curves of commuting pairs");
    CommutingTuple::require(sample, tol);
    const std::size_t n = sample.dim();

    check_resolvent_conditioning(eig_hermitian(sample.component(0).mat()).values, z1);
    check_resolvent_conditioning(eig_hermitian(sample.component(1).mat()).values, z2);

    const Matrix r1 = inverse(Matrix::identity(n) * z1 - sample.component(0).mat());
    const Matrix r2 = inverse(Matrix::identity(n) * z2 - sample.component(1).mat());

    std::vector<Matrix> sder, tder;
    for (int i = 1; i <= l; ++i) {
        const SelfAdjointTuple der = curve.derivative(tstar, i);
        sder.push_back(der.component(0).mat());
        tder.push_back(der.component(1).mat());
    }
    return resolvent_sum(enumerate_index_tuples(l), r1, r2, sder, tder);
}

HermitianMatrix contour_higher_derivative(const ScalarFunction& f, const CurveSpec& curve,
                                          double tstar, int l, const ContourSpec& spec,
                                          const TolerancePolicy& tol) {
    if (l < 1 || l > kMaxDerivativeOrder) throw OrderTooHigh("derivative order out of range");
    if (!f.has_complex()) throw NotAnalytic("contour route needs an analytic extension");
    if (spec.circles.size() != 2) throw DimensionMismatch("two contour circles expected");
    const SelfAdjointTuple sample = curve(tstar);
    if (sample.count() != 2)
        throw DimensionMismatch("contour derivatives are defined for curves of commuting pairs");
    CommutingTuple::require(sample, tol);
    const std::size_t n = sample.dim();

    const std::vector<double> ex = eig_hermitian(sample.component(0).mat()).values;
    const std::vector<double> ey = eig_hermitian(sample.component(1).mat()).values;
    spec.validate({ex, ey});

    std::vector<Matrix> sder, tder;
    for (int i = 1; i <= l; ++i) {
        const SelfAdjointTuple der = curve.derivative(tstar, i);
        sder.push_back(der.component(0).mat());
        tder.push_back(der.component(1).mat());
    }
    const auto elements = enumerate_index_tuples(l);

    const int big_n = spec.nodes;
    std::vector<Matrix> r1(static_cast<std::size_t>(big_n)), r2(static_cast<std::size_t>(big_n));
    std::vector<Complex> z1(static_cast<std::size_t>(big_n)), z2(static_cast<std::size_t>(big_n));
    std::vector<Complex> w1(static_cast<std::size_t>(big_n)), w2(static_cast<std::size_t>(big_n));
    for (int k = 0; k < big_n; ++k) {
        const double th = 2.0 * std::numbers::pi * k / big_n;
        z1[static_cast<std::size_t>(k)] = spec.circles[0].center + spec.circles[0].radius * std::polar(1.0, th);
        z2[static_cast<std::size_t>(k)] = spec.circles[1].center + spec.circles[1].radius * std::polar(1.0, th);
        w1[static_cast<std::size_t>(k)] = spec.circles[0].radius * std::polar(1.0, th) / static_cast<double>(big_n);
        w2[static_cast<std::size_t>(k)] = spec.circles[1].radius * std::polar(1.0, th) / static_cast<double>(big_n);
        check_resolvent_conditioning(ex, z1[static_cast<std::size_t>(k)]);
        check_resolvent_conditioning(ey, z2[static_cast<std::size_t>(k)]);
        r1[static_cast<std::size_t>(k)] =
            inverse(Matrix::identity(n) * z1[static_cast<std::size_t>(k)] - sample.component(0).mat());
        r2[static_cast<std::size_t>(k)] =
            inverse(Matrix::identity(n) * z2[static_cast<std::size_t>(k)] - sample.component(1).mat());
    }

    Matrix acc(n, n);
    for (int a = 0; a < big_n; ++a) {
        for (int b = 0; b < big_n; ++b) {
            const Complex zz[2] = {z1[static_cast<std::size_t>(a)], z2[static_cast<std::size_t>(b)]};
            const Complex fz = f.eval_complex(zz);
            if (std::abs(fz) == 0.0) continue;
            const Matrix sum = resolvent_sum(elements, r1[static_cast<std::size_t>(a)],
                                             r2[static_cast<std::size_t>(b)], sder, tder);
            acc += (w1[static_cast<std::size_t>(a)] * w2[static_cast<std::size_t>(b)] * fz) * sum;
        }
    }
    return HermitianMatrix(acc);
}

}  // namespace commute
