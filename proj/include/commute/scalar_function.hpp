#pragma once

#include <functional>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "commute/errors.hpp"
#include "commute/matrix.hpp"

namespace commute {

/// Open interval; unbounded by default.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double x) const { return x > lo && x < hi; }
    double width() const { return hi - lo; }
};

/// Open rectangle in R^d (product of open intervals).
struct Rectangle {
    std::vector<Interval> sides;

    static Rectangle unbounded(int d) { return Rectangle{std::vector<Interval>(static_cast<std::size_t>(d))}; }
    static Rectangle cube(int d, double lo, double hi) {
        return Rectangle{std::vector<Interval>(static_cast<std::size_t>(d), Interval{lo, hi})};
    }

    int dim() const { return static_cast<int>(sides.size()); }
    bool contains(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != dim()) return false;
        for (std::size_t r = 0; r < sides.size(); ++r)
            if (!sides[r].contains(x[r])) return false;
        return true;
    }
};

/// Multivariate polynomial: exponent multi-index -> coefficient.
class Polynomial {
public:
    explicit Polynomial(int arity) : arity_(arity) {}

    static Polynomial constant(int arity, double c);
    static Polynomial variable(int arity, int var);

    int arity() const { return arity_; }
    const std::map<std::vector<int>, double>& terms() const { return terms_; }
    int degree() const;

    void add_term(const std::vector<int>& exponents, double coeff);

    double eval(std::span<const double> x) const;
    Complex eval(std::span<const Complex> z) const;
    Polynomial partial(int var) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(double c);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    int arity_;
    std::map<std::vector<int>, double> terms_;
};

/// Evaluation plus partial derivatives of a real function on an open
/// rectangle. `partial` takes a multi-index, which makes mixed-partial
/// symmetry structural. An optional complex evaluator marks the function as
/// having an analytic extension (used by the contour routes).
class ScalarFunction {
public:
    using PartialFn = std::function<double(std::span<const int>, std::span<const double>)>;
    using ComplexFn = std::function<Complex(std::span<const Complex>)>;

    ScalarFunction() = default;
    ScalarFunction(int arity, int order, Rectangle domain, PartialFn partial,
                   ComplexFn complex_eval = nullptr);

    int arity() const { return arity_; }
    int order() const { return order_; }
    const Rectangle& domain() const { return domain_; }

    double operator()(std::span<const double> x) const;
    double eval2(double x, double y) const { return (*this)(std::vector<double>{x, y}); }

    /// Throws InsufficientSmoothness when |alpha| exceeds order().
    double partial(std::span<const int> alpha, std::span<const double> x) const;

    bool has_complex() const { return static_cast<bool>(complex_); }
    Complex eval_complex(std::span<const Complex> z) const;

    static ScalarFunction from_polynomial(const Polynomial& p, int order = 8);

private:
    int arity_ = 0;
    int order_ = 0;
    Rectangle domain_;
    PartialFn partial_;
    ComplexFn complex_;
};

}  // namespace commute
