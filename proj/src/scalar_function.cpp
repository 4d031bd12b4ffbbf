#include "commute/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>

namespace commute {

Polynomial Polynomial::constant(int arity, double c) {
    Polynomial p(arity);
    p.add_term(std::vector<int>(static_cast<std::size_t>(arity), 0), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int var) {
    Polynomial p(arity);
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.add_term(e, 1.0);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        if (c != 0.0) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void Polynomial::add_term(const std::vector<int>& exponents, double coeff) {
    if (static_cast<int>(exponents.size()) != arity_)
        throw InvalidArgument("exponent multi-index arity mismatch");
    for (int e : exponents)
        if (e < 0) throw InvalidArgument("negative exponent");
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
}

double Polynomial::eval(std::span<const double> x) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c;
        for (std::size_t r = 0; r < e.size(); ++r)
            for (int k = 0; k < e[r]; ++k) term *= x[r];
        acc += term;
    }
    return acc;
}

Complex Polynomial::eval(std::span<const Complex> z) const {
    Complex acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        Complex term{c, 0.0};
        for (std::size_t r = 0; r < e.size(); ++r)
            for (int k = 0; k < e[r]; ++k) term *= z[r];
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::partial(int var) const {
    Polynomial p(arity_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        std::vector<int> e2 = e;
        e2[static_cast<std::size_t>(var)] = k - 1;
        p.add_term(e2, c * k);
    }
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.arity_ != arity_) throw InvalidArgument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator*=(double c) {
    if (c == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw InvalidArgument("polynomial arity mismatch");
    Polynomial p(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t r = 0; r < e.size(); ++r) e[r] = ea[r] + eb[r];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

ScalarFunction::ScalarFunction(int arity, int order, Rectangle domain, PartialFn partial,
                               ComplexFn complex_eval)
    : arity_(arity), order_(order), domain_(std::move(domain)), partial_(std::move(partial)),
      complex_(std::move(complex_eval)) {
    if (domain_.dim() != arity_) throw InvalidArgument("domain dimension must equal arity");
}

double ScalarFunction::operator()(std::span<const double> x) const {
    const std::vector<int> zero(static_cast<std::size_t>(arity_), 0);
    return partial_(zero, x);
}

double ScalarFunction::partial(std::span<const int> alpha, std::span<const double> x) const {
    if (static_cast<int>(alpha.size()) != arity_)
        throw InvalidArgument("partial multi-index arity mismatch");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw InvalidArgument("negative derivative order");
        total += a;
    }
    if (total > order_)
        throw InsufficientSmoothness("derivative order " + std::to_string(total) +
                                     " exceeds available order " + std::to_string(order_));
    return partial_(alpha, x);
}

Complex ScalarFunction::eval_complex(std::span<const Complex> z) const {
    if (!complex_) throw NotAnalytic("function carries no analytic extension");
    return complex_(z);
}

ScalarFunction ScalarFunction::from_polynomial(const Polynomial& p, int order) {
    const int arity = p.arity();
    // Precompute every partial-derivative polynomial up to the requested
    // total order so evaluation stays allocation-light and thread-safe.
    auto table = std::make_shared<std::map<std::vector<int>, Polynomial>>();
    std::vector<int> alpha(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> fill = [&](int var, int remaining) {
        if (var == arity) {
            Polynomial q = p;
            for (int r = 0; r < arity; ++r)
                for (int k = 0; k < alpha[static_cast<std::size_t>(r)]; ++k) q = q.partial(r);
            table->emplace(alpha, std::move(q));
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
        return table->at(key).eval(x);
    };
    auto cx = [p](std::span<const Complex> z) { return p.eval(z); };
    return ScalarFunction(arity, order, Rectangle::unbounded(arity), partial, cx);
}

}  // namespace commute
