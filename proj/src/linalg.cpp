#include "commute/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "commute/errors.hpp"

namespace commute {

namespace {

double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem eig_hermitian(const Matrix& input) {
    if (input.rows() != input.cols())
        throw DimensionMismatch("eig_hermitian requires a square matrix");
    const std::size_t n = input.rows();

    // Work on the Hermitian part; callers pass Hermitian data, the
    // symmetrization only scrubs roundoff.
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
    Matrix v = Matrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double stop = 1e-15 * scale;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / g;

                // Real symmetric 2x2 Schur rotation after phasing out apq.
                const double tau = (aqq - app) / (2.0 * g);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex wpp = c * phase, wpq = s * phase;
                const double wqp = -s, wqq = c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * wpp + akq * wqp;
                    a(k, q) = akp * wpq + akq * wqq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * wpp + vkq * wqp;
                    v(k, q) = vkp * wpq + vkq * wqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        es.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
    }
    return es;
}

double operator_norm_hermitian(const Matrix& a) {
    if (a.rows() == 0) return 0.0;
    const EigenSystem es = eig_hermitian(a);
    double m = 0.0;
    for (double x : es.values) m = std::max(m, std::abs(x));
    return m;
}

double operator_norm(const Matrix& a) {
    if (a.rows() == 0) return 0.0;
    const EigenSystem es = eig_hermitian(a.adjoint() * a);
    double m = 0.0;
    for (double x : es.values) m = std::max(m, x);
    return std::sqrt(std::max(m, 0.0));
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse requires a square matrix");
    const std::size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    const double tiny = 1e-300 + 1e-20 * a.max_abs();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(w(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = std::abs(w(r, col));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best <= tiny) throw SingularMatrix("pivot below threshold in inverse()");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(piv, j), w(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const Complex d = w(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = w(r, col);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace commute
