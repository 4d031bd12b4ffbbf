#pragma once

#include <functional>
#include <vector>

#include "commute/matfun.hpp"
#include "commute/scalar_function.hpp"

namespace commute {

/// f^{[k, j-k]} evaluated on k+1 x-nodes and j-k+1 y-nodes. Repeated nodes
/// are resolved confluently (Hermite rule: a block of r+1 equal nodes uses
/// f^{(r)}(node)/r!). Node equality is exact floating equality; callers pass
/// group-representative values.
struct DividedDifferenceRequest {
    int k = 0, j = 0;
    std::vector<double> xnodes, ynodes;

    void validate() const;
};

/// One-variable confluent divided difference over the given nodes, with
/// derivative values supplied by `deriv(r, x) = g^(r)(x)`.
double confluent_dd(std::vector<double> nodes, const std::function<double(int, double)>& deriv);

/// Tensorized two-variable divided difference: the one-variable recursion in
/// x applied to the one-variable recursion in y.
double divided_difference(const ScalarFunction& f, const DividedDifferenceRequest& req);

/// Cauchy-integral route:
/// (2 pi i)^{-2} integral of f / (prod (z1 - x_q) prod (z2 - y_r)).
/// Repeated nodes become higher-order poles; no special casing needed.
double contour_dd(const ScalarFunction& f, const DividedDifferenceRequest& req,
                  const ContourSpec& c);

struct MeanValueResult {
    double dd = 0.0;
    bool certified = false;
    double lo = 0.0, hi = 0.0;   // range of f^(k,j-k) over the grid
    double slack = 0.0;
};

/// Certify dd * k! (j-k)! against the range of f^(k, j-k) over a fine grid
/// on closed subintervals containing the nodes.
MeanValueResult mean_value_check(const ScalarFunction& f, const DividedDifferenceRequest& req,
                                 const Interval& j1, const Interval& j2, int grid = 101);

}  // namespace commute
