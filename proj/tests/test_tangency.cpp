#include <doctest.h>

#include <cmath>

#include "commute/joint_diag.hpp"
#include "commute/linalg.hpp"
#include "commute/random.hpp"
#include "commute/tangency.hpp"

using namespace commute;

TEST_SUITE_BEGIN("tangency");

namespace {

Matrix pauli_x() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

CommutingTuple identity_tuple(std::size_t n, int d) {
    std::vector<HermitianMatrix> c(static_cast<std::size_t>(d), HermitianMatrix::identity(n));
    return CommutingTuple::require(SelfAdjointTuple(std::move(c)));
}

CommutingTuple planted_pair(std::size_t n, const std::vector<std::vector<double>>& rows,
                            std::uint64_t seed) {
    Rng rng(seed);
    Matrix u = haar_unitary(n, rng);
    std::vector<HermitianMatrix> comps;
    for (std::size_t r = 0; r < rows[0].size(); ++r) {
        Matrix dm(n, n);
        for (std::size_t i = 0; i < n; ++i) dm(i, i) = rows[i][r];
        comps.emplace_back(u * dm * u.adjoint());
    }
    return CommutingTuple::require(SelfAdjointTuple(comps));
}

// Build a tangent direction from the constructive side of the tangency
// characterization: Delta^r = U([Y, D^r] + B^r)U* with Y skew-Hermitian vanishing on
// group-diagonal blocks and B^r commuting Hermitian blocks.
SelfAdjointTuple derived_tangent(const CommutingTuple& s, std::uint64_t seed) {
    auto jd = joint_diagonalize(s);
    const std::size_t n = s.dim();
    const int d = s.count();
    Rng rng(seed);

    Matrix y(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (jd.same_group(static_cast<int>(i), static_cast<int>(j))) continue;
            const Complex z = rng.gaussian_complex();
            y(i, j) = z;
            y(j, i) = -std::conj(z);
        }

    std::vector<Matrix> blocks(static_cast<std::size_t>(d), Matrix(n, n));
    for (auto [b, e] : jd.groups) {
        const std::size_t k = static_cast<std::size_t>(e - b);
        Matrix w = haar_unitary(k, rng);
        for (int r = 0; r < d; ++r) {
            Matrix dm(k, k);
            for (std::size_t i = 0; i < k; ++i) dm(i, i) = rng.uniform(-1.0, 1.0);
            Matrix blk = w * dm * w.adjoint();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    blocks[static_cast<std::size_t>(r)](static_cast<std::size_t>(b) + i,
                                                        static_cast<std::size_t>(b) + j) = blk(i, j);
        }
    }

    std::vector<HermitianMatrix> comps;
    for (int r = 0; r < d; ++r) {
        Matrix dr(n, n);
        for (std::size_t i = 0; i < n; ++i) dr(i, i) = jd.eigs[i][static_cast<std::size_t>(r)];
        Matrix inner = commutator(y, dr) + blocks[static_cast<std::size_t>(r)];
        comps.emplace_back(jd.u * inner * jd.u.adjoint());
    }
    return SelfAdjointTuple(comps);
}

}  // namespace

TEST_CASE("at the identity, commuting directions are tangent and only those") {
    auto id = identity_tuple(3, 2);
    Rng rng(17);
    Matrix u = haar_unitary(3, rng);
    Matrix d1(3, 3), d2(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        d1(i, i) = rng.uniform(-1, 1);
        d2(i, i) = rng.uniform(-1, 1);
    }
    SelfAdjointTuple commuting({HermitianMatrix(u * d1 * u.adjoint()),
                                HermitianMatrix(u * d2 * u.adjoint())});
    auto res = tangency_check(id, commuting);
    CHECK(res.tangent);
    CHECK(res.residual_first <= 1e-12);
    CHECK(res.residual_second <= 1e-12);

    SelfAdjointTuple pauli({HermitianMatrix(pauli_x()), HermitianMatrix(pauli_z())});
    auto id2 = identity_tuple(2, 2);
    auto rej = tangency_check(id2, pauli);
    CHECK(!rej.tangent);
    CHECK(rej.residual_second > 1e-3);
    CHECK(!rej.data.has_value());
}

TEST_CASE("derived directions from the constructive side are accepted") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto s = planted_pair(4, {{0.4, 1.0}, {0.4, 1.0}, {-0.6, 0.2}, {1.5, -1.1}}, seed);
        auto delta = derived_tangent(s, seed + 50);
        auto res = tangency_check(s, delta);
        CHECK(res.tangent);
        REQUIRE(res.data.has_value());
        CHECK(res.data->y.asymmetry() <= 2.0 * res.data->y.max_abs() + 1e-30);
        // Y is skew-Hermitian: Y + Y* = 0
        Matrix ysum = res.data->y + res.data->y.adjoint();
        CHECK(ysum.max_abs() <= 1e-10);
    }
}

TEST_CASE("q-independence of Y holds when accepted, fails on a rejected input") {
    auto s = planted_pair(3, {{0.0, 0.5}, {1.0, 2.5}, {2.0, -0.7}}, 23);
    auto delta = derived_tangent(s, 99);
    auto res = tangency_check(s, delta);
    REQUIRE(res.tangent);
    const auto& td = *res.data;
    const std::size_t n = 3;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (td.diag.same_group(static_cast<int>(i), static_cast<int>(j))) continue;
            for (int q = 0; q < 2; ++q) {
                const double dq = td.diag.eigs[j][static_cast<std::size_t>(q)] -
                                  td.diag.eigs[i][static_cast<std::size_t>(q)];
                if (std::abs(dq) <= 1e-8) continue;
                const Complex cand = td.gamma[static_cast<std::size_t>(q)](i, j) / dq;
                CHECK(std::abs(cand - td.y(i, j)) <= 1e-8 * (1.0 + std::abs(cand)));
            }
        }
    }

    // Non-tangent input: the two candidate quotients differ visibly.
    auto sd = CommutingTuple::require(SelfAdjointTuple(
        {HermitianMatrix::diagonal({0.0, 1.0}), HermitianMatrix::diagonal({0.0, 2.0})}));
    SelfAdjointTuple bad({HermitianMatrix(pauli_x()), HermitianMatrix(pauli_x())});
    auto rej = tangency_check(sd, bad);
    CHECK(!rej.tangent);
    // candidates: 1/(1-0) = 1 vs 1/(2-0) = 0.5
    CHECK(rej.residual_first > 1e-4);
}

TEST_CASE("entrywise tangency relation holds by construction") {
    for (std::uint64_t seed = 4; seed <= 8; ++seed) {
        auto s = planted_pair(4, {{0.1, -1.0}, {0.7, 0.3}, {-0.4, 0.9}, {1.1, 0.5}}, seed);
        auto delta = derived_tangent(s, seed * 3);
        auto res = tangency_check(s, delta);
        CHECK(res.tangent);
        const auto& td = *res.data;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                const double dx = td.diag.eigs[i][0] - td.diag.eigs[j][0];
                const double dy = td.diag.eigs[i][1] - td.diag.eigs[j][1];
                const Complex lhs = td.gamma[1](i, j) * dx;
                const Complex rhs = td.gamma[0](i, j) * dy;
                CHECK(std::abs(lhs - rhs) <= 1e-9);
            }
    }
}

TEST_CASE("matrix_exponential: zero, rotation block, inverse identity") {
    CHECK(matrix_exponential(Matrix(3, 3)).max_abs_diff(Matrix::identity(3)) < 1e-14);

    const double theta = std::numbers::pi / 2.0;
    Matrix a(2, 2);
    a(0, 1) = theta;
    a(1, 0) = -theta;
    Matrix e = matrix_exponential(a);
    CHECK(std::abs(e(0, 0) - Complex{std::cos(theta), 0.0}) < 1e-13);
    CHECK(std::abs(e(0, 1) - Complex{std::sin(theta), 0.0}) < 1e-13);
    CHECK(std::abs(e(1, 0) - Complex{-std::sin(theta), 0.0}) < 1e-13);
    CHECK(std::abs(e(1, 1) - Complex{std::cos(theta), 0.0}) < 1e-13);

    Rng rng(64);
    Matrix y(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        y(i, i) = Complex{0.0, rng.gaussian()};
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex z = rng.gaussian_complex();
            y(i, j) = z;
            y(j, i) = -std::conj(z);
        }
    }
    Matrix ey = matrix_exponential(y);
    Matrix eyi = matrix_exponential(Complex{-1.0, 0.0} * y);
    CHECK(unitary_defect(ey) < 1e-12);
    CHECK((ey * eyi).max_abs_diff(Matrix::identity(4)) < 1e-12);
}

TEST_CASE("witness curve: base point, commutation along samples, FD slope order") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto s = planted_pair(4, {{0.4, 1.0}, {0.4, 1.0}, {-0.6, 0.2}, {1.5, -1.1}}, seed);
        auto delta = derived_tangent(s, seed + 7);
        auto res = tangency_check(s, delta);
        REQUIRE(res.tangent);
        WitnessCurve curve(*res.data);

        // S(0) = S
        auto s0 = curve(0.0);
        for (int r = 0; r < 2; ++r)
            CHECK(s0.component(r).mat().max_abs_diff(s.component(r).mat()) < 1e-11);

        // stays commuting on [-1, 1]
        for (int k = 0; k < 20; ++k) {
            const double t = -1.0 + 2.0 * k / 19.0;
            CHECK(validate_commuting(curve(t)).ok());
        }

        // central-difference slope converges to Delta at second order
        double err3 = 0.0, err4 = 0.0;
        for (double h : {1e-3, 1e-4}) {
            auto fd = tuple_scale(1.0 / (2.0 * h), tuple_sub(curve(h), curve(-h)));
            double err = 0.0;
            for (int r = 0; r < 2; ++r)
                err = std::max(err, fd.component(r).mat().max_abs_diff(delta.component(r).mat()));
            (h == 1e-3 ? err3 : err4) = err;
        }
        if (err4 > 1e-13) {
            const double order = std::log10(err3 / err4);
            CHECK(order >= 1.9);
        }
    }
}

TEST_CASE("witness curve special cases: zero direction, pure-Y isospectral rotation") {
    auto s = planted_pair(3, {{0.2, 1.0}, {0.9, -0.5}, {-1.3, 0.4}}, 31);
    auto zero = SelfAdjointTuple::zero(3, 2);
    auto res = tangency_check(s, zero);
    REQUIRE(res.tangent);
    WitnessCurve constant(*res.data);
    for (double t : {-0.7, 0.3, 1.5})
        for (int r = 0; r < 2; ++r)
            CHECK(constant(t).component(r).mat().max_abs_diff(s.component(r).mat()) < 1e-11);

    // Gamma-tilde-free direction: spectrum constant along the curve
    auto jd = joint_diagonalize(s);
    Matrix y(3, 3);
    y(0, 1) = Complex{0.3, 0.4};
    y(1, 0) = Complex{-0.3, 0.4};
    y(1, 2) = Complex{-0.2, 0.1};
    y(2, 1) = Complex{0.2, 0.1};
    std::vector<HermitianMatrix> comps;
    for (int r = 0; r < 2; ++r) {
        Matrix dr(3, 3);
        for (std::size_t i = 0; i < 3; ++i) dr(i, i) = jd.eigs[i][static_cast<std::size_t>(r)];
        comps.emplace_back(jd.u * commutator(y, dr) * jd.u.adjoint());
    }
    auto rot = tangency_check(s, SelfAdjointTuple(comps));
    REQUIRE(rot.tangent);
    WitnessCurve curve(*rot.data);
    auto base_spec = spectrum(s);
    for (double t : {-0.8, 0.25, 0.6}) {
        auto sp = spectrum(CommutingTuple::require(curve(t)));
        for (std::size_t i = 0; i < sp.size(); ++i)
            for (std::size_t r = 0; r < 2; ++r)
                CHECK(sp[i][r] == doctest::Approx(base_spec[i][r]).epsilon(1e-9));
    }
}

TEST_CASE("at the identity the witness curve is the straight line") {
    auto id = identity_tuple(3, 2);
    Rng rng(3);
    Matrix u = haar_unitary(3, rng);
    Matrix d1(3, 3), d2(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        d1(i, i) = rng.uniform(-1, 1);
        d2(i, i) = rng.uniform(-1, 1);
    }
    SelfAdjointTuple delta({HermitianMatrix(u * d1 * u.adjoint()),
                            HermitianMatrix(u * d2 * u.adjoint())});
    auto res = tangency_check(id, delta);
    REQUIRE(res.tangent);
    WitnessCurve curve(*res.data);
    for (double t : {-0.5, 0.2, 1.0}) {
        auto st = curve(t);
        for (int r = 0; r < 2; ++r) {
            Matrix want = Matrix::identity(3) + t * delta.component(r).mat();
            CHECK(st.component(r).mat().max_abs_diff(want) < 1e-11);
        }
    }
}

TEST_CASE("tangency verdict is invariant under simultaneous conjugation") {
    auto s = planted_pair(3, {{0.0, 0.5}, {1.0, 2.5}, {2.0, -0.7}}, 8);
    auto delta = derived_tangent(s, 21);
    Rng rng(77);
    Matrix v = haar_unitary(3, rng);
    std::vector<HermitianMatrix> sc, dc;
    for (int r = 0; r < 2; ++r) {
        sc.emplace_back(v * s.component(r).mat() * v.adjoint());
        dc.emplace_back(v * delta.component(r).mat() * v.adjoint());
    }
    auto res1 = tangency_check(s, delta);
    auto res2 = tangency_check(CommutingTuple::require(SelfAdjointTuple(sc)), SelfAdjointTuple(dc));
    CHECK(res1.tangent == res2.tangent);
    CHECK(res2.tangent);

    // and a conjugated non-tangent pair stays rejected
    SelfAdjointTuple bad({HermitianMatrix(pauli_x()), HermitianMatrix(pauli_x())});
    auto sd = CommutingTuple::require(SelfAdjointTuple(
        {HermitianMatrix::diagonal({0.0, 1.0}), HermitianMatrix::diagonal({0.0, 2.0})}));
    CHECK(!tangency_check(sd, bad).tangent);
}

TEST_CASE("tangent cone is not linear at a repeated joint eigenvalue") {
    auto id = identity_tuple(2, 2);
    SelfAdjointTuple a({HermitianMatrix(pauli_x()), HermitianMatrix(pauli_x())});
    SelfAdjointTuple b({HermitianMatrix(pauli_z()), HermitianMatrix(Complex{-1.0, 0.0} * pauli_z())});
    CHECK(tangency_check(id, a).tangent);
    CHECK(tangency_check(id, b).tangent);
    CHECK(!tangency_check(id, tuple_add(a, b)).tangent);
}

TEST_CASE("scalar base tuple reduces to pairwise commutation of the direction") {
    // S = (2I, -I): every eigenvalue equal, same code path as the generic case
    auto s = CommutingTuple::require(SelfAdjointTuple(
        {HermitianMatrix(2.0 * Matrix::identity(2)),
         HermitianMatrix(Complex{-1.0, 0.0} * Matrix::identity(2))}));
    SelfAdjointTuple commuting({HermitianMatrix(pauli_z()), HermitianMatrix(pauli_z())});
    SelfAdjointTuple clashing({HermitianMatrix(pauli_x()), HermitianMatrix(pauli_z())});
    auto yes = tangency_check(s, commuting);
    CHECK(yes.tangent);
    REQUIRE(yes.data.has_value());
    CHECK(yes.data->y.max_abs() == 0.0);
    CHECK(!tangency_check(s, clashing).tangent);
}

TEST_SUITE_END();
