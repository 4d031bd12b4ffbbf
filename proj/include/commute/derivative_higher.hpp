#pragma once

#include <cstdint>
#include <vector>

#include "commute/curve.hpp"
#include "commute/divided_difference.hpp"
#include "commute/matfun.hpp"
#include "commute/scalar_function.hpp"

namespace commute {

inline constexpr int kMaxDerivativeOrder = 4;

/// One element of I_l: a pair of tuples of positive integers
/// (i_1..i_k) u (i_{k+1}..i_j) with i_1 + ... + i_j = l, together with its
/// multinomial weight l! / (i_1! ... i_j!).
struct IndexTuple {
    std::vector<int> left;    // orders attached to S-derivative factors
    std::vector<int> right;   // orders attached to T-derivative factors
    double weight = 1.0;

    int k() const { return static_cast<int>(left.size()); }
    int j() const { return static_cast<int>(left.size() + right.size()); }
};

/// Complete enumeration of I_l, 1 <= l <= 4. |I_1| = 2, |I_2| = 5.
std::vector<IndexTuple> enumerate_index_tuples(int l);

/// The l-th derivative of F(S,T) along a C^m curve in the commuting pairs,
/// via the divided-difference Schur-product formula evaluated in the joint
/// eigenbasis at t*. Cost grows as n^{j+1} per index tuple; fine at n <= 8,
/// l <= 3.
HermitianMatrix higher_derivative(const ScalarFunction& f, const CurveSpec& curve, double tstar,
                                  int l, const TolerancePolicy& tol = {},
                                  std::uint64_t seed = kDefaultSeed);

/// The same sum with the per-index-tuple matrices exposed (in the diagonal
/// frame, before conjugation by U). Intended for structural tests.
struct HigherDerivativeTerms {
    std::vector<IndexTuple> elements;
    std::vector<Matrix> terms;        // one per element, diagonal frame
    Matrix total;                     // sum of terms
    Matrix u;                         // the conjugating unitary
    std::vector<double> x, y;         // joint eigenvalue coordinates
};

/// Core of the formula on explicitly supplied frame data: eigenvalue
/// coordinates and conjugated curve derivatives gamma[i] = U* S^{(i+1)} U,
/// delta[i] = U* T^{(i+1)} U.
Matrix higher_derivative_core(const ScalarFunction& f, const std::vector<double>& x,
                              const std::vector<double>& y, const std::vector<Matrix>& gamma,
                              const std::vector<Matrix>& delta, int l,
                              std::vector<Matrix>* per_term = nullptr);

HigherDerivativeTerms higher_derivative_terms(const ScalarFunction& f, const CurveSpec& curve,
                                              double tstar, int l, const TolerancePolicy& tol = {},
                                              std::uint64_t seed = kDefaultSeed);

/// d^l/dt^l (R_1 R_2) at t*: the resolvent-product sum
/// sum_{I_l} l!/(i_1!..i_j!) R1 S^{i_1} R1 .. R1 R2 T^{i_{k+1}} R2 .. T^{i_j} R2,
/// with R1 = (z1 I - S)^{-1}, R2 = (z2 I - T)^{-1}.
Matrix resolvent_product_derivative(const CurveSpec& curve, double tstar, int l, Complex z1,
                                    Complex z2, const TolerancePolicy& tol = {});

/// Cauchy-integral route for the l-th derivative:
/// (2 pi i)^{-2} integral of f(z1,z2) d^l/dt^l (R1 R2).
HermitianMatrix contour_higher_derivative(const ScalarFunction& f, const CurveSpec& curve,
                                          double tstar, int l, const ContourSpec& c,
                                          const TolerancePolicy& tol = {});

}  // namespace commute
