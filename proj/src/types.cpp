#include "commute/types.hpp"

#include <cmath>
#include <string>

#include "commute/linalg.hpp"

namespace commute {

HermitianMatrix::HermitianMatrix(const Matrix& raw) {
    if (raw.rows() != raw.cols()) throw DimensionMismatch("HermitianMatrix requires a square matrix");
    defect_ = raw.asymmetry();
    const std::size_t n = raw.rows();
    a_ = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a_(i, i) = Complex{raw(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
            a_(i, j) = v;
            a_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return HermitianMatrix(m);
}

SelfAdjointTuple::SelfAdjointTuple(std::vector<HermitianMatrix> components)
    : components_(std::move(components)) {
    for (const auto& c : components_)
        if (c.dim() != components_[0].dim())
            throw DimensionMismatch("tuple components must share dimension");
}

SelfAdjointTuple SelfAdjointTuple::zero(std::size_t n, int d) {
    std::vector<HermitianMatrix> c(static_cast<std::size_t>(d), HermitianMatrix::zero(n));
    return SelfAdjointTuple(std::move(c));
}

namespace {

SelfAdjointTuple combine(const SelfAdjointTuple& a, const SelfAdjointTuple& b, double sign) {
    if (a.count() != b.count() || a.dim() != b.dim())
        throw DimensionMismatch("tuple shape mismatch");
    std::vector<HermitianMatrix> c;
    c.reserve(static_cast<std::size_t>(a.count()));
    for (int r = 0; r < a.count(); ++r)
        c.emplace_back(a.component(r).mat() + sign * b.component(r).mat());
    return SelfAdjointTuple(std::move(c));
}

}  // namespace

SelfAdjointTuple tuple_add(const SelfAdjointTuple& a, const SelfAdjointTuple& b) {
    return combine(a, b, 1.0);
}

SelfAdjointTuple tuple_sub(const SelfAdjointTuple& a, const SelfAdjointTuple& b) {
    return combine(a, b, -1.0);
}

SelfAdjointTuple tuple_scale(double c, const SelfAdjointTuple& a) {
    std::vector<HermitianMatrix> out;
    out.reserve(static_cast<std::size_t>(a.count()));
    for (int r = 0; r < a.count(); ++r) out.emplace_back(c * a.component(r).mat());
    return SelfAdjointTuple(std::move(out));
}

double tuple_norm(const SelfAdjointTuple& s) {
    double m = 0.0;
    for (int r = 0; r < s.count(); ++r)
        m = std::max(m, operator_norm_hermitian(s.component(r).mat()));
    return m;
}

double tuple_max_abs(const SelfAdjointTuple& s) {
    double m = 0.0;
    for (int r = 0; r < s.count(); ++r) m = std::max(m, s.component(r).mat().max_abs());
    return m;
}

ValidateResult validate_commuting(const SelfAdjointTuple& s, const TolerancePolicy& tol) {
    tol.validate();
    ValidateResult res;
    const int d = s.count();
    std::vector<double> norms(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) norms[static_cast<std::size_t>(r)] = operator_norm_hermitian(s.component(r).mat());

    for (int r = 0; r < d; ++r) {
        for (int q = r + 1; q < d; ++q) {
            const double c =
                commutator(s.component(r).mat(), s.component(q).mat()).max_abs();
            // relative scaling so large-norm tuples are not spuriously rejected
            const double bound =
                tol.comm * (1.0 + norms[static_cast<std::size_t>(r)] * norms[static_cast<std::size_t>(q)]);
            if (c > bound) res.violations.push_back({r, q, c, bound});
        }
    }
    if (res.violations.empty()) res.tuple = CommutingTuple(s);
    return res;
}

CommutingTuple CommutingTuple::require(const SelfAdjointTuple& s, const TolerancePolicy& tol) {
    ValidateResult r = validate_commuting(s, tol);
    if (!r.ok()) {
        std::string msg = "tuple does not pairwise commute:";
        for (const auto& v : r.violations)
            msg += " [S^" + std::to_string(v.r + 1) + ",S^" + std::to_string(v.s + 1) +
                   "] max-entry " + std::to_string(v.norm);
        throw NotCommuting(msg);
    }
    return *r.tuple;
}

}  // namespace commute
