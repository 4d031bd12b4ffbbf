#include "commute/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "commute/random.hpp"

namespace commute::expr {

namespace {

NodePtr constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = v;
    return n;
}

NodePtr unary(Kind kind, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = std::move(a);
    return n;
}

NodePtr binary(Kind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr variable(int var) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = var;
    return n;
}

NodePtr power(NodePtr a, int exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = exponent;
    n->a = std::move(a);
    return n;
}

bool is_const(const NodePtr& n, double v) { return n->kind == Kind::Constant && n->value == v; }

// light folding to keep repeated differentiation from ballooning
NodePtr simplify(NodePtr n) {
    switch (n->kind) {
        case Kind::Add:
            if (is_const(n->a, 0.0)) return n->b;
            if (is_const(n->b, 0.0)) return n->a;
            if (n->a->kind == Kind::Constant && n->b->kind == Kind::Constant)
                return constant(n->a->value + n->b->value);
            break;
        case Kind::Sub:
            if (is_const(n->b, 0.0)) return n->a;
            if (n->a->kind == Kind::Constant && n->b->kind == Kind::Constant)
                return constant(n->a->value - n->b->value);
            if (is_const(n->a, 0.0)) return simplify(unary(Kind::Neg, n->b));
            break;
        case Kind::Mul:
            if (is_const(n->a, 0.0) || is_const(n->b, 0.0)) return constant(0.0);
            if (is_const(n->a, 1.0)) return n->b;
            if (is_const(n->b, 1.0)) return n->a;
            if (n->a->kind == Kind::Constant && n->b->kind == Kind::Constant)
                return constant(n->a->value * n->b->value);
            break;
        case Kind::Neg:
            if (n->a->kind == Kind::Constant) return constant(-n->a->value);
            break;
        case Kind::Pow:
            if (n->exponent == 0) return constant(1.0);
            if (n->exponent == 1) return n->a;
            break;
        default:
            break;
    }
    return n;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    NodePtr parse_expression() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = simplify(binary(Kind::Add, lhs, parse_term()));
            else if (accept('-'))
                lhs = simplify(binary(Kind::Sub, lhs, parse_term()));
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (accept('*')) lhs = simplify(binary(Kind::Mul, lhs, parse_factor()));
        return lhs;
    }

    NodePtr parse_factor() {
        NodePtr base = parse_base();
        if (accept('^')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected a nonnegative integer exponent");
            int e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                e = e * 10 + (text[pos] - '0');
                if (e > 64) fail("exponent too large");
                ++pos;
            }
            return simplify(power(base, e));
        }
        return base;
    }

    NodePtr parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        const char c = text[pos];

        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return simplify(unary(Kind::Neg, parse_factor()));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(text.substr(pos), &used);
            } catch (const std::exception&) {
                fail("malformed number");
            }
            pos += used;
            return constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
            const std::string word = text.substr(pos, end - pos);
            if (word == "x") {
                pos = end;
                return variable(0);
            }
            if (word == "y") {
                pos = end;
                return variable(1);
            }
            Kind kind;
            if (word == "exp")
                kind = Kind::Exp;
            else if (word == "sin")
                kind = Kind::Sin;
            else if (word == "cos")
                kind = Kind::Cos;
            else if (word == "sqrt")
                kind = Kind::Sqrt;
            else if (word == "inv")
                kind = Kind::Inv;
            else
                fail("unknown identifier '" + word + "'");
            pos = end;
            if (!accept('(')) fail("expected '(' after '" + word + "'");
            NodePtr inner = parse_expression();
            if (!accept(')')) fail("expected ')'");
            return unary(kind, inner);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

template <typename T>
T eval_impl(const NodePtr& n, std::span<const T> x) {
    switch (n->kind) {
        case Kind::Constant: return T(n->value);
        case Kind::Variable:
            if (n->var >= static_cast<int>(x.size()))
                throw InvalidArgument("expression variable beyond the evaluation arity");
            return x[static_cast<std::size_t>(n->var)];
        case Kind::Add: return eval_impl(n->a, x) + eval_impl(n->b, x);
        case Kind::Sub: return eval_impl(n->a, x) - eval_impl(n->b, x);
        case Kind::Mul: return eval_impl(n->a, x) * eval_impl(n->b, x);
        case Kind::Neg: return -eval_impl(n->a, x);
        case Kind::Pow: {
            T base = eval_impl(n->a, x);
            T acc = T(1.0);
            for (int k = 0; k < n->exponent; ++k) acc *= base;
            return acc;
        }
        case Kind::Exp: return std::exp(eval_impl(n->a, x));
        case Kind::Sin: return std::sin(eval_impl(n->a, x));
        case Kind::Cos: return std::cos(eval_impl(n->a, x));
        case Kind::Sqrt: return std::sqrt(eval_impl(n->a, x));
        case Kind::Inv: return T(1.0) / eval_impl(n->a, x);
    }
    throw InvalidArgument("corrupt expression node");
}

}  // namespace

NodePtr parse(const std::string& text) {
    Parser p(text);
    NodePtr root = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return root;
}

NodePtr derivative(const NodePtr& n, int var) {
    switch (n->kind) {
        case Kind::Constant: return constant(0.0);
        case Kind::Variable: return constant(n->var == var ? 1.0 : 0.0);
        case Kind::Add: return simplify(binary(Kind::Add, derivative(n->a, var), derivative(n->b, var)));
        case Kind::Sub: return simplify(binary(Kind::Sub, derivative(n->a, var), derivative(n->b, var)));
        case Kind::Mul:
            return simplify(binary(Kind::Add,
                                   simplify(binary(Kind::Mul, derivative(n->a, var), n->b)),
                                   simplify(binary(Kind::Mul, n->a, derivative(n->b, var)))));
        case Kind::Neg: return simplify(unary(Kind::Neg, derivative(n->a, var)));
        case Kind::Pow:
            // d(u^k) = k u^{k-1} u'
            return simplify(binary(
                Kind::Mul, constant(static_cast<double>(n->exponent)),
                simplify(binary(Kind::Mul, simplify(power(n->a, n->exponent - 1)),
                                derivative(n->a, var)))));
        case Kind::Exp: return simplify(binary(Kind::Mul, unary(Kind::Exp, n->a), derivative(n->a, var)));
        case Kind::Sin: return simplify(binary(Kind::Mul, unary(Kind::Cos, n->a), derivative(n->a, var)));
        case Kind::Cos:
            return simplify(unary(Kind::Neg, simplify(binary(Kind::Mul, unary(Kind::Sin, n->a),
                                                             derivative(n->a, var)))));
        case Kind::Sqrt:
            // d(sqrt u) = u' * inv(sqrt u) * 1/2
            return simplify(binary(
                Kind::Mul, constant(0.5),
                simplify(binary(Kind::Mul, derivative(n->a, var),
                                unary(Kind::Inv, unary(Kind::Sqrt, n->a))))));
        case Kind::Inv:
            // d(1/u) = -u' * inv(u)^2
            return simplify(unary(
                Kind::Neg, simplify(binary(Kind::Mul, derivative(n->a, var),
                                           power(unary(Kind::Inv, n->a), 2)))));
    }
    throw InvalidArgument("corrupt expression node");
}

double eval(const NodePtr& node, std::span<const double> x) { return eval_impl<double>(node, x); }
Complex eval(const NodePtr& node, std::span<const Complex> z) { return eval_impl<Complex>(node, z); }

int max_variable(const NodePtr& n) {
    int m = -1;
    if (n->kind == Kind::Variable) m = n->var;
    if (n->a) m = std::max(m, max_variable(n->a));
    if (n->b) m = std::max(m, max_variable(n->b));
    return m;
}

bool has_domain_restriction(const NodePtr& n) {
    if (n->kind == Kind::Sqrt || n->kind == Kind::Inv) return true;
    if (n->a && has_domain_restriction(n->a)) return true;
    if (n->b && has_domain_restriction(n->b)) return true;
    return false;
}

std::string to_string(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Constant: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%g", n->value);
            return buf;
        }
        case Kind::Variable: return n->var == 0 ? "x" : "y";
        case Kind::Add: return "(" + to_string(n->a) + " + " + to_string(n->b) + ")";
        case Kind::Sub: return "(" + to_string(n->a) + " - " + to_string(n->b) + ")";
        case Kind::Mul: return "(" + to_string(n->a) + "*" + to_string(n->b) + ")";
        case Kind::Neg: return "(-" + to_string(n->a) + ")";
        case Kind::Pow: return to_string(n->a) + "^" + std::to_string(n->exponent);
        case Kind::Exp: return "exp(" + to_string(n->a) + ")";
        case Kind::Sin: return "sin(" + to_string(n->a) + ")";
        case Kind::Cos: return "cos(" + to_string(n->a) + ")";
        case Kind::Sqrt: return "sqrt(" + to_string(n->a) + ")";
        case Kind::Inv: return "inv(" + to_string(n->a) + ")";
    }
    return "?";
}

std::optional<Polynomial> to_polynomial(const NodePtr& n, int arity) {
    switch (n->kind) {
        case Kind::Constant: return Polynomial::constant(arity, n->value);
        case Kind::Variable:
            if (n->var >= arity) return std::nullopt;
            return Polynomial::variable(arity, n->var);
        case Kind::Add:
        case Kind::Sub: {
            auto a = to_polynomial(n->a, arity);
            auto b = to_polynomial(n->b, arity);
            if (!a || !b) return std::nullopt;
            if (n->kind == Kind::Sub) *b *= -1.0;
            *a += *b;
            return a;
        }
        case Kind::Mul: {
            auto a = to_polynomial(n->a, arity);
            auto b = to_polynomial(n->b, arity);
            if (!a || !b) return std::nullopt;
            return *a * *b;
        }
        case Kind::Neg: {
            auto a = to_polynomial(n->a, arity);
            if (!a) return std::nullopt;
            *a *= -1.0;
            return a;
        }
        case Kind::Pow: {
            auto a = to_polynomial(n->a, arity);
            if (!a) return std::nullopt;
            Polynomial acc = Polynomial::constant(arity, 1.0);
            for (int k = 0; k < n->exponent; ++k) acc = acc * *a;
            return acc;
        }
        default: return std::nullopt;
    }
}

ScalarFunction to_scalar_function(const NodePtr& node, int arity, Rectangle domain, int order,
                                  bool self_test) {
    if (arity < 1 || arity > 2) throw InvalidArgument("expression functions have arity 1 or 2");
    if (max_variable(node) >= arity)
        throw InvalidArgument("expression mentions a variable beyond the requested arity");
    if (domain.dim() != arity) throw InvalidArgument("domain dimension must equal arity");

    // eagerly build every partial-derivative tree up to the total order
    auto table = std::make_shared<std::map<std::vector<int>, NodePtr>>();
    std::vector<int> alpha(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> fill = [&](int var, int remaining) {
        if (var == arity) {
            NodePtr d = node;
            for (int r = 0; r < arity; ++r)
                for (int k = 0; k < alpha[static_cast<std::size_t>(r)]; ++k) d = derivative(d, r);
            table->emplace(alpha, std::move(d));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            alpha[static_cast<std::size_t>(var)] = k;
            fill(var + 1, remaining - k);
        }
        alpha[static_cast<std::size_t>(var)] = 0;
    };
    fill(0, order);

    auto partial = [table](std::span<const int> a, std::span<const double> x) {
        const std::vector<int> key(a.begin(), a.end());
        return eval(table->at(key), x);
    };
    auto cx = [node](std::span<const Complex> z) { return eval(node, z); };
    ScalarFunction f(arity, order, std::move(domain), partial, cx);

    if (self_test) {
        // first partials vs central differences at 20 interior sample points
        Rng rng(12345);
        const auto& dom = f.domain();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> x(static_cast<std::size_t>(arity));
            for (int r = 0; r < arity; ++r) {
                const auto& side = dom.sides[static_cast<std::size_t>(r)];
                const double lo = std::max(side.lo, -2.0), hi = std::min(side.hi, 2.0);
                x[static_cast<std::size_t>(r)] = rng.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
            }
            for (int r = 0; r < arity; ++r) {
                std::vector<int> a(static_cast<std::size_t>(arity), 0);
                a[static_cast<std::size_t>(r)] = 1;
                const double sym = f.partial(a, x);
                const double h = 1e-6 * (1.0 + std::abs(x[static_cast<std::size_t>(r)]));
                std::vector<double> xp = x, xm = x;
                xp[static_cast<std::size_t>(r)] += h;
                xm[static_cast<std::size_t>(r)] -= h;
                const double fd = (f(xp) - f(xm)) / (2.0 * h);
                if (std::abs(sym - fd) > 1e-6 * (1.0 + std::abs(sym)))
                    throw Error("SelfTestFailed",
                                "symbolic partial disagrees with finite differences at a sample point");
            }
        }
    }
    return f;
}

ScalarFunction parse_function(const std::string& text, int arity, std::optional<Rectangle> domain,
                              int order, bool self_test) {
    NodePtr node = parse(text);
    if (has_domain_restriction(node) && !domain)
        throw InvalidArgument(
            "expressions with sqrt/inv need an explicit domain (--dom-x / --dom-y)");
    Rectangle dom = domain ? *domain : Rectangle::unbounded(arity);
    return to_scalar_function(node, arity, std::move(dom), order, self_test);
}

}  // namespace commute::expr
