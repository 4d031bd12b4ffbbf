#include "commute/joint_diag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "commute/linalg.hpp"
#include "commute/random.hpp"

namespace commute {

namespace {

struct Leaf {
    std::vector<Complex> column;       // length n
    std::vector<double> values;        // length d
};

double scalar_deviation(const Matrix& b) {
    // max deviation of b from (tr b / k) * I
    const std::size_t k = b.rows();
    Complex tr{0.0, 0.0};
    for (std::size_t i = 0; i < k; ++i) tr += b(i, i);
    const Complex mean = tr / static_cast<double>(k);
    double dev = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            dev = std::max(dev, std::abs(b(i, j) - (i == j ? mean : Complex{0.0, 0.0})));
    return dev;
}

Matrix compress(const Matrix& b, const Matrix& w) {
    return w.adjoint() * b * w;  // w: k x m orthonormal columns
}

Matrix basis_columns(const Matrix& v, const std::vector<std::size_t>& cols) {
    Matrix w(v.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < v.rows(); ++i) w(i, j) = v(i, cols[j]);
    return w;
}

// Recursively split the invariant subspace spanned by the columns of w
// (the compressions of the tuple components living there are b[r]) until
// every component acts as a scalar. Emits one leaf per final basis vector
// with the per-index raw diagonal values.
void split_subspace(const std::vector<Matrix>& b, const Matrix& w, Rng& rng,
                    std::vector<Leaf>& out) {
    const std::size_t k = b[0].rows();
    const std::size_t n = w.rows();
    const std::size_t d = b.size();

    auto emit_all = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            Leaf leaf;
            leaf.column.resize(n);
            for (std::size_t row = 0; row < n; ++row) leaf.column[row] = w(row, i);
            leaf.values.resize(d);
            for (std::size_t r = 0; r < d; ++r) leaf.values[r] = b[r](i, i).real();
            out.push_back(std::move(leaf));
        }
    };

    if (k == 1) {
        emit_all();
        return;
    }

    double maxdev = 0.0, scale = 0.0;
    for (const auto& m : b) {
        maxdev = std::max(maxdev, scalar_deviation(m));
        scale = std::max(scale, m.max_abs());
    }
    if (maxdev <= 1e-11 * (1.0 + scale)) {
        emit_all();  // genuine joint eigenspace at working precision
        return;
    }

    for (int attempt = 0; attempt < 5; ++attempt) {
        Matrix m(k, k);
        for (std::size_t r = 0; r < d; ++r) {
            const double c = rng.gaussian();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m(i, j) += c * b[r](i, j);
        }
        const EigenSystem es = eig_hermitian(m);
        double evscale = 0.0;
        for (double e : es.values) evscale = std::max(evscale, std::abs(e));
        const double gap_threshold = 1e-11 * (1.0 + evscale);

        std::vector<std::vector<std::size_t>> clusters;
        clusters.push_back({0});
        for (std::size_t i = 1; i < k; ++i) {
            if (es.values[i] - es.values[i - 1] > gap_threshold)
                clusters.emplace_back();
            clusters.back().push_back(i);
        }
        if (clusters.size() < 2) continue;  // unlucky combination, redraw

        for (const auto& cluster : clusters) {
            const Matrix vc = basis_columns(es.vectors, cluster);
            const Matrix wc = w * vc;
            std::vector<Matrix> bc;
            bc.reserve(d);
            for (const auto& comp : b) bc.push_back(compress(comp, vc));
            split_subspace(bc, wc, rng, out);
        }
        return;
    }

    // Five generic combinations failed to separate anything: the components
    // are indistinguishable from scalars at the splitting resolution.
    emit_all();
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r] < b[r]) return true;
        if (a[r] > b[r]) return false;
    }
    return false;
}

double max_coord_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) m = std::max(m, std::abs(a[r] - b[r]));
    return m;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

JointEigenTable joint_eigentable(const CommutingTuple& s, std::uint64_t seed) {
    const std::size_t n = s.dim();
    const int d = s.count();
    Rng rng(mix_seed(seed, 0xd1a6ULL));

    std::vector<Matrix> comps;
    comps.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) comps.push_back(s.component(r).mat());

    std::vector<Leaf> leaves;
    leaves.reserve(n);
    split_subspace(comps, Matrix::identity(n), rng, leaves);

    std::vector<std::size_t> order(leaves.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(leaves[a].values, leaves[b].values);
    });

    JointEigenTable table;
    table.u = Matrix(n, n);
    table.eigs.resize(n);
    for (std::size_t col = 0; col < n; ++col) {
        const Leaf& leaf = leaves[order[col]];
        table.eigs[col] = leaf.values;
        for (std::size_t row = 0; row < n; ++row) table.u(row, col) = leaf.column[row];
    }
    return table;
}

JointDiagonalization joint_diagonalize(const CommutingTuple& s, const TolerancePolicy& tol,
                                       std::uint64_t seed, AmbiguityPolicy policy) {
    tol.validate();
    JointEigenTable table = joint_eigentable(s, seed);
    const int n = static_cast<int>(s.dim());

    // Single-linkage grouping in the max-coordinate metric.
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (max_coord_dist(table.eigs[static_cast<std::size_t>(i)], table.eigs[static_cast<std::size_t>(j)]) <= tol.group)
                uf.unite(i, j);

    // Order groups by their lexicographically smallest member; rows are
    // already lex-sorted, so the smallest member is the first encountered.
    std::vector<int> root_order;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(i);
        if (members[static_cast<std::size_t>(r)].empty()) root_order.push_back(r);
        members[static_cast<std::size_t>(r)].push_back(i);
    }

    JointDiagonalization jd;
    jd.tol_used = tol.group;
    jd.u = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    jd.eigs.resize(static_cast<std::size_t>(n));
    jd.group_index.resize(static_cast<std::size_t>(n));

    int pos = 0;
    for (std::size_t g = 0; g < root_order.size(); ++g) {
        const int begin = pos;
        for (int src : members[static_cast<std::size_t>(root_order[g])]) {
            jd.eigs[static_cast<std::size_t>(pos)] = table.eigs[static_cast<std::size_t>(src)];
            for (int row = 0; row < n; ++row)
                jd.u(static_cast<std::size_t>(row), static_cast<std::size_t>(pos)) =
                    table.u(static_cast<std::size_t>(row), static_cast<std::size_t>(src));
            jd.group_index[static_cast<std::size_t>(pos)] = static_cast<int>(g);
            ++pos;
        }
        jd.groups.emplace_back(begin, pos);
    }

    // Tolerance-sensitivity scan: distances in (group/10, group*10) make the
    // block structure dependent on the exact threshold.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist =
                max_coord_dist(jd.eigs[static_cast<std::size_t>(i)], jd.eigs[static_cast<std::size_t>(j)]);
            if (dist > tol.group / 10.0 && dist < tol.group * 10.0)
                jd.ambiguities.push_back({i, j, dist});
        }
    }
    if (!jd.ambiguities.empty() && policy == AmbiguityPolicy::Throw) {
        const auto& a = jd.ambiguities.front();
        throw GroupingAmbiguous(
            "joint eigenvalues " + std::to_string(a.i) + " and " + std::to_string(a.j) +
            " are " + std::to_string(a.distance) + " apart, inside the sensitive band (" +
            std::to_string(tol.group / 10.0) + ", " + std::to_string(tol.group * 10.0) + ")");
    }
    return jd;
}

std::vector<std::vector<double>> spectrum(const CommutingTuple& s, const TolerancePolicy& tol,
                                          std::uint64_t seed, AmbiguityPolicy policy) {
    JointDiagonalization jd = joint_diagonalize(s, tol, seed, policy);
    std::vector<std::vector<double>> rows = jd.eigs;
    std::sort(rows.begin(), rows.end(), lex_less);
    return rows;
}

}  // namespace commute
