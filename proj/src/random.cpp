#include "commute/random.hpp"

#include <cmath>

namespace commute {

Matrix haar_unitary(std::size_t n, Rng& rng) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();

    // Modified Gram-Schmidt on columns.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    return g;
}

Matrix random_hermitian(std::size_t n, Rng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = rng.gaussian_complex();
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

}  // namespace commute
