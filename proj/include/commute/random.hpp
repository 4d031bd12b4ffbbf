#pragma once

#include <cstdint>
#include <random>

#include "commute/matrix.hpp"

namespace commute {

/// All randomness in the library flows through explicitly seeded Rng
/// instances; there is no ambient entropy anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double gaussian() { return normal_(gen_); }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01_(gen_);
    }
    std::uint64_t integer() { return gen_(); }
    Complex gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform01_{0.0, 1.0};
};

/// Deterministic seed mixing for derived streams (per-sample seeds etc.).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal kept real positive (modified Gram-Schmidt does exactly that).
Matrix haar_unitary(std::size_t n, Rng& rng);

/// Gaussian Hermitian matrix (GUE-like scaling is irrelevant here).
Matrix random_hermitian(std::size_t n, Rng& rng);

}  // namespace commute
