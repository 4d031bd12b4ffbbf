#pragma once

// Shared fixtures for the unit and acceptance suites: planted commuting
// tuples, constructively derived tangent directions, and a few closed-form
// scalar functions with exact partials of every order.

#include <cmath>
#include <functional>
#include <vector>

#include "commute/applications.hpp"
#include "commute/joint_diag.hpp"
#include "commute/random.hpp"
#include "commute/scalar_function.hpp"
#include "commute/tangency.hpp"
#include "commute/types.hpp"

namespace fixtures {

using namespace commute;

inline CommutingTuple planted(std::size_t n, const std::vector<std::vector<double>>& rows,
                              std::uint64_t seed) {
    Rng rng(seed);
    Matrix u = haar_unitary(n, rng);
    const int d = static_cast<int>(rows[0].size());
    std::vector<HermitianMatrix> comps;
    for (int r = 0; r < d; ++r) {
        Matrix dm(n, n);
        for (std::size_t i = 0; i < n; ++i) dm(i, i) = rows[i][static_cast<std::size_t>(r)];
        comps.emplace_back(u * dm * u.adjoint());
    }
    return CommutingTuple::require(SelfAdjointTuple(comps));
}

/// exp(x) cos(y): entire, all partials closed-form.
inline ScalarFunction exp_cos() {
    auto partial = [](std::span<const int> a, std::span<const double> x) {
        const double ex = std::exp(x[0]);
        const int m = a[1] % 4;
        const double cy[4] = {std::cos(x[1]), -std::sin(x[1]), -std::cos(x[1]), std::sin(x[1])};
        return ex * cy[m];
    };
    auto cx = [](std::span<const Complex> z) { return std::exp(z[0]) * std::cos(z[1]); };
    return ScalarFunction(2, 8, Rectangle::unbounded(2), partial, cx);
}

/// exp(x) sin(y).
inline ScalarFunction exp_sin() {
    auto partial = [](std::span<const int> a, std::span<const double> x) {
        const double ex = std::exp(x[0]);
        const int m = a[1] % 4;
        const double sy[4] = {std::sin(x[1]), std::cos(x[1]), -std::sin(x[1]), -std::cos(x[1])};
        return ex * sy[m];
    };
    auto cx = [](std::span<const Complex> z) { return std::exp(z[0]) * std::sin(z[1]); };
    return ScalarFunction(2, 8, Rectangle::unbounded(2), partial, cx);
}

/// exp(x + y).
inline ScalarFunction exp_sum() {
    auto partial = [](std::span<const int>, std::span<const double> x) {
        return std::exp(x[0] + x[1]);
    };
    auto cx = [](std::span<const Complex> z) { return std::exp(z[0] + z[1]); };
    return ScalarFunction(2, 8, Rectangle::unbounded(2), partial, cx);
}

/// sin(x) cos(y).
inline ScalarFunction sin_cos() {
    auto partial = [](std::span<const int> a, std::span<const double> x) {
        const int mx = a[0] % 4, my = a[1] % 4;
        const double sx[4] = {std::sin(x[0]), std::cos(x[0]), -std::sin(x[0]), -std::cos(x[0])};
        const double cy[4] = {std::cos(x[1]), -std::sin(x[1]), -std::cos(x[1]), std::sin(x[1])};
        return sx[mx] * cy[my];
    };
    auto cx = [](std::span<const Complex> z) { return std::sin(z[0]) * std::cos(z[1]); };
    return ScalarFunction(2, 8, Rectangle::unbounded(2), partial, cx);
}

inline Polynomial random_polynomial(int arity, int degree, std::uint64_t seed) {
    Rng rng(seed);
    Polynomial p(arity);
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> fill = [&](int var, int remaining) {
        if (var == arity) {
            p.add_term(e, rng.uniform(-1.0, 1.0));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[static_cast<std::size_t>(var)] = k;
            fill(var + 1, remaining - k);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    fill(0, degree);
    return p;
}

/// A random base with an optional planted multiplicity pattern and a derived
/// tangent direction at it.
struct TangentInstance {
    CommutingTuple base;
    SelfAdjointTuple direction;
    TangentData data;
};

inline TangentInstance tangent_instance(std::size_t n, int d, std::uint64_t seed,
                                        const std::vector<int>* multiplicities = nullptr) {
    const Rectangle box = Rectangle::cube(d, -1.0, 1.0);
    CommutingTuple base = random_commuting_tuple(n, d, box, seed, multiplicities);
    SelfAdjointTuple dir = random_tangent_direction(base, mix_seed(seed, 77));
    TangencyResult res = tangency_check(base, dir);
    if (!res.tangent) throw std::logic_error("fixture: derived direction not tangent");
    return {base, dir, *res.data};
}

}  // namespace fixtures
