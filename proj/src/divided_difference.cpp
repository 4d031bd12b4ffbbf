#include "commute/divided_difference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace commute {

void DividedDifferenceRequest::validate() const {
    if (k < 0 || j < k) throw InvalidArgument("divided difference needs 0 <= k <= j");
    if (static_cast<int>(xnodes.size()) != k + 1)
        throw InvalidArgument("expected " + std::to_string(k + 1) + " x-nodes");
    if (static_cast<int>(ynodes.size()) != j - k + 1)
        throw InvalidArgument("expected " + std::to_string(j - k + 1) + " y-nodes");
}

double confluent_dd(std::vector<double> nodes, const std::function<double(int, double)>& deriv) {
    const std::size_t m = nodes.size();
    if (m == 0) throw InvalidArgument("divided difference over an empty node list");
    std::sort(nodes.begin(), nodes.end());

    // Hermite-genealogy table: column 0 holds values, equal-node spans use
    // the derivative rule f^{(len)}(z)/len!.
    std::vector<double> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = deriv(0, nodes[i]);
    double factorial = 1.0;
    for (std::size_t len = 1; len < m; ++len) {
        factorial *= static_cast<double>(len);
        for (std::size_t i = 0; i + len < m; ++i) {
            if (nodes[i + len] == nodes[i])
                col[i] = deriv(static_cast<int>(len), nodes[i]) / factorial;
            else
                col[i] = (col[i + 1] - col[i]) / (nodes[i + len] - nodes[i]);
        }
        col.resize(m - len);
    }
    return col[0];
}

double divided_difference(const ScalarFunction& f, const DividedDifferenceRequest& req) {
    req.validate();
    if (f.arity() != 2) throw DimensionMismatch("two-variable divided differences need arity 2");
    for (double x : req.xnodes)
        if (!f.domain().sides[0].contains(x))
            throw SpectrumOutsideDomain("x-node outside the function domain");
    for (double y : req.ynodes)
        if (!f.domain().sides[1].contains(y))
            throw SpectrumOutsideDomain("y-node outside the function domain");

    return confluent_dd(req.xnodes, [&](int a, double x) {
        return confluent_dd(req.ynodes, [&](int b, double y) {
            const int alpha[2] = {a, b};
            const double pt[2] = {x, y};
            return f.partial(alpha, pt);
        });
    });
}

double contour_dd(const ScalarFunction& f, const DividedDifferenceRequest& req,
                  const ContourSpec& spec) {
    req.validate();
    if (!f.has_complex()) throw NotAnalytic("contour divided difference needs an analytic extension");
    if (spec.circles.size() != 2) throw DimensionMismatch("two contour circles expected");
    spec.validate({req.xnodes, req.ynodes});

    const int big_n = spec.nodes;
    Complex acc{0.0, 0.0};
    for (int k1 = 0; k1 < big_n; ++k1) {
        const double th1 = 2.0 * std::numbers::pi * k1 / big_n;
        const Complex w1 = spec.circles[0].radius * std::polar(1.0, th1) / static_cast<double>(big_n);
        const Complex z1 = spec.circles[0].center + spec.circles[0].radius * std::polar(1.0, th1);
        Complex denom1{1.0, 0.0};
        for (double x : req.xnodes) denom1 *= (z1 - Complex{x, 0.0});

        Complex inner{0.0, 0.0};
        for (int k2 = 0; k2 < big_n; ++k2) {
            const double th2 = 2.0 * std::numbers::pi * k2 / big_n;
            const Complex w2 =
                spec.circles[1].radius * std::polar(1.0, th2) / static_cast<double>(big_n);
            const Complex z2 = spec.circles[1].center + spec.circles[1].radius * std::polar(1.0, th2);
            Complex denom2{1.0, 0.0};
            for (double y : req.ynodes) denom2 *= (z2 - Complex{y, 0.0});
            const Complex zz[2] = {z1, z2};
            inner += w2 * f.eval_complex(zz) / denom2;
        }
        acc += w1 * inner / denom1;
    }
    return acc.real();
}

MeanValueResult mean_value_check(const ScalarFunction& f, const DividedDifferenceRequest& req,
                                 const Interval& j1, const Interval& j2, int grid) {
    req.validate();
    for (double x : req.xnodes)
        if (x < j1.lo || x > j1.hi) throw InvalidArgument("x-subinterval must contain the x-nodes");
    for (double y : req.ynodes)
        if (y < j2.lo || y > j2.hi) throw InvalidArgument("y-subinterval must contain the y-nodes");

    MeanValueResult res;
    res.dd = divided_difference(f, req);

    const int alpha[2] = {req.k, req.j - req.k};
    double lo = 1e300, hi = -1e300;
    for (int a = 0; a < grid; ++a) {
        const double x = grid == 1 ? j1.lo : j1.lo + (j1.hi - j1.lo) * a / (grid - 1);
        for (int b = 0; b < grid; ++b) {
            const double y = grid == 1 ? j2.lo : j2.lo + (j2.hi - j2.lo) * b / (grid - 1);
            const double pt[2] = {x, y};
            const double v = f.partial(alpha, pt);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    res.lo = lo;
    res.hi = hi;

    double kf = 1.0, jkf = 1.0;
    for (int i = 2; i <= req.k; ++i) kf *= i;
    for (int i = 2; i <= req.j - req.k; ++i) jkf *= i;
    const double target = res.dd * kf * jkf;

    res.slack = 2.0 * (hi - lo) / grid + 1e-9 * (1.0 + std::abs(target));
    res.certified = target >= lo - res.slack && target <= hi + res.slack;
    return res;
}

}  // namespace commute
