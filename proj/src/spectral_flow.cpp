#include "commute/spectral_flow.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "commute/random.hpp"

namespace commute {

namespace {

constexpr double kBig = 1e100;

double dist_inf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) m = std::max(m, std::abs(a[r] - b[r]));
    return m;
}

// Kuhn's augmenting-path matching on edges with cost <= threshold.
bool kuhn_augment(int row, const std::vector<std::vector<double>>& cost, double threshold,
                  std::vector<char>& visited, std::vector<int>& match_col) {
    const int n = static_cast<int>(cost.size());
    for (int col = 0; col < n; ++col) {
        if (visited[static_cast<std::size_t>(col)]) continue;
        if (cost[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] > threshold) continue;
        visited[static_cast<std::size_t>(col)] = 1;
        if (match_col[static_cast<std::size_t>(col)] < 0 ||
            kuhn_augment(match_col[static_cast<std::size_t>(col)], cost, threshold, visited, match_col)) {
            match_col[static_cast<std::size_t>(col)] = row;
            return true;
        }
    }
    return false;
}

bool feasible(const std::vector<std::vector<double>>& cost, double threshold) {
    const int n = static_cast<int>(cost.size());
    std::vector<int> match_col(static_cast<std::size_t>(n), -1);
    for (int row = 0; row < n; ++row) {
        std::vector<char> visited(static_cast<std::size_t>(n), 0);
        if (!kuhn_augment(row, cost, threshold, visited, match_col)) return false;
    }
    return true;
}

// O(n^3) min-sum assignment with potentials; forbidden edges carry kBig.
std::vector<int> hungarian(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0), v(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<int> p(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n + 1), kBig);
        std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = -1;
            double delta = kBig;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = a[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                                   u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> result(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)] > 0) result[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
    return result;
}

struct Sample {
    JointDiagonalization jd;
    double t = 0.0;
};

std::vector<Sample> collect_samples(const CurveSpec& curve, std::span<const double> grid,
                                    const TolerancePolicy& tol, std::uint64_t seed) {
    if (grid.size() < 2) throw InvalidArgument("tracking needs at least two grid points");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1])) throw InvalidArgument("grid must be strictly increasing");

    std::vector<Sample> samples;
    samples.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const CommutingTuple st = CommutingTuple::require(curve(grid[k]), tol);
        Sample s;
        s.t = grid[k];
        s.jd = joint_diagonalize(st, tol, mix_seed(seed, k), AmbiguityPolicy::Record);
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<int> match_step(const std::vector<std::vector<double>>& from,
                            const std::vector<std::vector<double>>& to) {
    const int n = static_cast<int>(from.size());
    std::vector<std::vector<double>> cost(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dist_inf(from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(j)]);
    return bottleneck_assignment(cost);
}

}  // namespace

std::vector<int> bottleneck_assignment(const std::vector<std::vector<double>>& cost,
                                       double* bottleneck_out) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) throw InvalidArgument("empty cost matrix");
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n) throw DimensionMismatch("cost matrix must be square");

    std::set<double> values;
    for (const auto& row : cost) values.insert(row.begin(), row.end());
    std::vector<double> sorted(values.begin(), values.end());

    // binary search the smallest threshold admitting a perfect matching
    std::size_t lo = 0, hi = sorted.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(cost, sorted[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    const double bottleneck = sorted[lo];
    if (bottleneck_out) *bottleneck_out = bottleneck;

    // among bottleneck-feasible assignments, minimize the total displacement
    std::vector<std::vector<double>> restricted = cost;
    for (auto& row : restricted)
        for (auto& c : row)
            if (c > bottleneck) c = kBig;
    return hungarian(restricted);
}

EigenPathBundle track_eigenvalues(const CurveSpec& curve, std::span<const double> grid,
                                  const TolerancePolicy& tol, std::uint64_t seed) {
    const std::vector<Sample> samples = collect_samples(curve, grid, tol, seed);
    const std::size_t n = samples[0].jd.eigs.size();

    EigenPathBundle bundle;
    bundle.grid.assign(grid.begin(), grid.end());
    bundle.paths.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) bundle.paths[i].push_back(samples[0].jd.eigs[i]);
    for (const auto& s : samples) bundle.sample_ambiguities.push_back(s.jd.ambiguities);

    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        std::vector<std::vector<double>> from(n);
        for (std::size_t i = 0; i < n; ++i)
            from[i] = bundle.paths[i].back();
        const std::vector<int> pi = match_step(from, samples[k + 1].jd.eigs);
        bundle.assignments.push_back(pi);

        const double dt = samples[k + 1].t - samples[k].t;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& next = samples[k + 1].jd.eigs[static_cast<std::size_t>(pi[i])];
            bundle.lipschitz_estimate =
                std::max(bundle.lipschitz_estimate, dist_inf(bundle.paths[i].back(), next) / dt);
            bundle.paths[i].push_back(next);
        }
    }
    return bundle;
}

HermitianMatrix rellich_fixture(double t) {
    Matrix m(2, 2);
    if (t != 0.0) {
        const double a = std::exp(-1.0 / (t * t));
        const double c = std::cos(2.0 / t), s = std::sin(2.0 / t);
        m(0, 0) = a * c;
        m(0, 1) = a * s;
        m(1, 0) = a * s;
        m(1, 1) = -a * c;
    }
    return HermitianMatrix(m);
}

DiscontinuityReport eigenvector_discontinuity_report(const CurveSpec& curve,
                                                     std::span<const double> grid,
                                                     const TolerancePolicy& tol,
                                                     std::uint64_t seed, double ratio_threshold) {
    const std::vector<Sample> samples = collect_samples(curve, grid, tol, seed);
    const std::size_t n = samples[0].jd.eigs.size();

    DiscontinuityReport report;
    report.ratio_threshold = ratio_threshold;

    // first pass: matchings and the global eigenvalue Lipschitz estimate
    std::vector<std::vector<int>> assignments;
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        const std::vector<int> pi = match_step(samples[k].jd.eigs, samples[k + 1].jd.eigs);
        const double dt = samples[k + 1].t - samples[k].t;
        for (std::size_t i = 0; i < n; ++i)
            report.lipschitz_estimate = std::max(
                report.lipschitz_estimate,
                dist_inf(samples[k].jd.eigs[i], samples[k + 1].jd.eigs[static_cast<std::size_t>(pi[i])]) / dt);
        assignments.push_back(pi);
    }

    const double rate_floor = std::max(report.lipschitz_estimate, 1e-12);
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        const auto& pi = assignments[k];
        const auto& a = samples[k];
        const auto& b = samples[k + 1];
        StepAngleReport step;
        step.t0 = a.t;
        step.t1 = b.t;
        const double dt = b.t - a.t;

        for (std::size_t i = 0; i < n; ++i) {
            // angle between eigenvector i at t0 and the matched group
            // subspace at t1; the projector makes it basis-free
            const int g = b.jd.group_of(pi[i]);
            const auto [gb, ge] = b.jd.groups[static_cast<std::size_t>(g)];
            double pn = 0.0;
            for (int col = gb; col < ge; ++col) {
                Complex dot{0.0, 0.0};
                for (std::size_t row = 0; row < n; ++row)
                    dot += std::conj(b.jd.u(row, static_cast<std::size_t>(col))) * a.jd.u(row, i);
                pn += std::norm(dot);
            }
            const double cosang = std::min(1.0, std::sqrt(pn));
            step.angles.push_back(std::acos(cosang));
            step.max_angle = std::max(step.max_angle, step.angles.back());

            step.eig_rate = std::max(
                step.eig_rate, dist_inf(a.jd.eigs[i], b.jd.eigs[static_cast<std::size_t>(pi[i])]) / dt);
        }
        step.angle_rate = step.max_angle / dt;
        step.flagged = step.angle_rate > ratio_threshold * rate_floor &&
                       step.eig_rate <= report.lipschitz_estimate * (1.0 + 1e-9) + 1e-300;
        report.steps.push_back(std::move(step));
    }
    return report;
}

}  // namespace commute
