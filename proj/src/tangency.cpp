#include "commute/tangency.hpp"

#include <cmath>
#include <string>

#include "commute/linalg.hpp"

namespace commute {

TangencyResult tangency_check(const CommutingTuple& s, const SelfAdjointTuple& delta,
                              const TolerancePolicy& tol, std::uint64_t seed) {
    tol.validate();
    if (s.dim() != delta.dim() || s.count() != delta.count())
        throw DimensionMismatch("base tuple and direction must share shape");
    const std::size_t n = s.dim();
    const int d = s.count();

    // Grouping ambiguity is recorded, never thrown: this check always
    // returns a verdict, and callers read the residuals.
    const JointDiagonalization jd =
        joint_diagonalize(s, tol, seed, AmbiguityPolicy::Record);

    TangencyResult res;
    res.grouping_ambiguities = jd.ambiguities;

    std::vector<Matrix> gamma;
    gamma.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        gamma.push_back(jd.u.adjoint() * delta.component(r).mat() * jd.u);

    std::vector<Matrix> gamma_tilde(static_cast<std::size_t>(d), Matrix(n, n));
    for (int r = 0; r < d; ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (jd.same_group(static_cast<int>(i), static_cast<int>(j)))
                    gamma_tilde[static_cast<std::size_t>(r)](i, j) = gamma[static_cast<std::size_t>(r)](i, j);

    // First family: [D^r, Gamma^s] = [D^s, Gamma^r], entrywise
    // (x_i^r - x_j^r) Gamma^s_ij = (x_i^s - x_j^s) Gamma^r_ij.
    double r1 = 0.0;
    for (int r = 0; r < d; ++r) {
        for (int q = r + 1; q < d; ++q) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const double dr = jd.eigs[i][static_cast<std::size_t>(r)] - jd.eigs[j][static_cast<std::size_t>(r)];
                    const double dq = jd.eigs[i][static_cast<std::size_t>(q)] - jd.eigs[j][static_cast<std::size_t>(q)];
                    const Complex lhs = dr * gamma[static_cast<std::size_t>(q)](i, j);
                    const Complex rhs = dq * gamma[static_cast<std::size_t>(r)](i, j);
                    r1 = std::max(r1, std::abs(lhs - rhs));
                }
            }
        }
    }

    double r2 = 0.0;
    for (int r = 0; r < d; ++r)
        for (int q = r + 1; q < d; ++q)
            r2 = std::max(r2, commutator(gamma_tilde[static_cast<std::size_t>(r)],
                                         gamma_tilde[static_cast<std::size_t>(q)]).max_abs());

    const double scale = (1.0 + tuple_norm(s.tuple())) * (1.0 + tuple_norm(delta));
    res.scale = scale;
    res.residual_first = r1 / scale;
    res.residual_second = r2 / scale;
    res.tangent = res.residual_first <= tol.comm && res.residual_second <= tol.comm;
    if (!res.tangent) return res;

    // Y_ij = Gamma^q_ij / (x_j^q - x_i^q) with q the smallest coordinate
    // separating the groups; zero inside a group. The accepted first
    // condition makes the choice of q immaterial.
    Matrix y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (jd.same_group(static_cast<int>(i), static_cast<int>(j))) continue;
            int q = 0;
            double best = 0.0;
            for (int r = 0; r < d; ++r) {
                const double diff = std::abs(jd.eigs[i][static_cast<std::size_t>(r)] -
                                             jd.eigs[j][static_cast<std::size_t>(r)]);
                if (diff > tol.group) {
                    q = r;
                    break;
                }
                if (diff > best) {  // fallback for chain-merged borderline groupings
                    best = diff;
                    q = r;
                }
            }
            y(i, j) = gamma[static_cast<std::size_t>(q)](i, j) /
                      (jd.eigs[j][static_cast<std::size_t>(q)] - jd.eigs[i][static_cast<std::size_t>(q)]);
        }
    }

    TangentData td{s, delta, jd, std::move(gamma), std::move(gamma_tilde), std::move(y)};
    res.data = std::move(td);
    return res;
}

Matrix matrix_exponential(const Matrix& skew) {
    if (skew.rows() != skew.cols()) throw DimensionMismatch("matrix_exponential requires square input");
    const std::size_t n = skew.rows();
    // Scrub any roundoff asymmetry: keep exactly the skew-Hermitian part.
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (skew(i, j) - std::conj(skew(j, i)));

    const Complex minus_i{0.0, -1.0};
    const EigenSystem es = eig_hermitian(minus_i * a);  // A = i H
    Matrix phases(n, n);
    for (std::size_t k = 0; k < n; ++k)
        phases(k, k) = std::polar(1.0, es.values[k]);
    return es.vectors * phases * es.vectors.adjoint();
}

WitnessCurve::WitnessCurve(TangentData td) : td_(std::move(td)) {
    const Complex minus_i{0.0, -1.0};
    const EigenSystem es = eig_hermitian(minus_i * td_.y);
    y_basis_ = es.vectors;
    y_phase_ = es.values;
}

Matrix WitnessCurve::exp_yt(double t) const {
    const std::size_t n = td_.dim();
    Matrix phases(n, n);
    for (std::size_t k = 0; k < n; ++k)
        phases(k, k) = std::polar(1.0, y_phase_[k] * t);
    return y_basis_ * phases * y_basis_.adjoint();
}

SelfAdjointTuple WitnessCurve::operator()(double t) const {
    return derivative(t, 0);
}

SelfAdjointTuple WitnessCurve::derivative(double t, int order) const {
    if (order < 0) throw InvalidArgument("derivative order must be nonnegative");
    const std::size_t n = td_.dim();
    const Matrix e = exp_yt(t);
    const Matrix ei = e.adjoint();
    const Matrix u = td_.diag.u;
    const Matrix ui = u.adjoint();

    std::vector<HermitianMatrix> comps;
    comps.reserve(static_cast<std::size_t>(td_.count()));
    for (int r = 0; r < td_.count(); ++r) {
        // Inside the conjugation by e^{Yt}, the integrand is affine in t:
        // N_0(t) = D^r + t GammaTilde^r, and each derivative applies
        // N -> [Y, N] + N'. Affine-in-t form (A, B) with N = A + tB.
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = td_.diag.eigs[i][static_cast<std::size_t>(r)];
        Matrix b = td_.gamma_tilde[static_cast<std::size_t>(r)];
        for (int k = 0; k < order; ++k) {
            Matrix a_next = commutator(td_.y, a) + b;
            Matrix b_next = commutator(td_.y, b);
            a = std::move(a_next);
            b = std::move(b_next);
        }
        const Matrix inner = a + t * b;
        comps.emplace_back(u * (e * inner * ei) * ui);
    }
    return SelfAdjointTuple(std::move(comps));
}

WitnessCurve witness_curve(const TangentData& td) { return WitnessCurve(td); }

}  // namespace commute
