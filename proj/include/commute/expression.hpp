#pragma once

#include <memory>
#include <optional>
#include <string>

#include "commute/scalar_function.hpp"

namespace commute::expr {

/// Parse tree over variables x, y, real constants, +, -, *, ^ (nonnegative
/// integer), and unary exp/sin/cos/sqrt/inv, closed under differentiation.
enum class Kind { Constant, Variable, Add, Sub, Mul, Neg, Pow, Exp, Sin, Cos, Sqrt, Inv };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    double value = 0.0;   // Constant
    int var = 0;          // Variable index (x = 0, y = 1)
    int exponent = 0;     // Pow
    NodePtr a, b;
};

/// Recursive-descent parser; throws ParseError with the offending position.
NodePtr parse(const std::string& text);

NodePtr derivative(const NodePtr& node, int var);

double eval(const NodePtr& node, std::span<const double> x);
Complex eval(const NodePtr& node, std::span<const Complex> z);

/// Highest variable index mentioned (-1 when none).
int max_variable(const NodePtr& node);

/// Whether sqrt or inv appears anywhere (these need a declared domain).
bool has_domain_restriction(const NodePtr& node);

std::string to_string(const NodePtr& node);

/// Monomial expansion when the tree is polynomial (no exp/sin/cos/sqrt/inv).
std::optional<Polynomial> to_polynomial(const NodePtr& node, int arity);

/// Wrap a parse tree as a ScalarFunction of the given arity with symbolic
/// partials to the requested order (eagerly differentiated). When
/// `self_test` is set, each first partial is checked against central finite
/// differences at 20 sample points inside the domain.
ScalarFunction to_scalar_function(const NodePtr& node, int arity, Rectangle domain,
                                  int order = 4, bool self_test = true);

/// parse + to_scalar_function. sqrt/inv require a bounded-from-trouble
/// domain supplied by the caller.
ScalarFunction parse_function(const std::string& text, int arity,
                              std::optional<Rectangle> domain = std::nullopt, int order = 4,
                              bool self_test = true);

}  // namespace commute::expr
