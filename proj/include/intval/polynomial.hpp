#pragma once

#include "intval/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace intval {

// Dense univariate polynomial, coefficients in ascending degree. The
// highest stored coefficient is always nonzero; the zero polynomial has no
// coefficients and degree -1.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Coeff& a) { return Polynomial(std::vector<Coeff>{a}); }
    static Polynomial x() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
    static Polynomial monomial(const Coeff& a, std::size_t k) {
        std::vector<Coeff> c(k + 1, Coeff(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
    const Coeff& leading() const { return c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Coeff& a) {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Coeff operator()(const Coeff& at) const {
        Coeff acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Coeff> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return Polynomial(std::move(r));
    }

    // this(inner(X))
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

// Throws InvalidArgument if some coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& p);

bool has_integer_coeffs(const RatPolynomial& p);

struct DivMod {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

// Division by a monic divisor of degree >= 1.
DivMod poly_divmod(const RatPolynomial& f, const RatPolynomial& g);

// Division by any nonzero divisor over Q.
DivMod field_divmod(const RatPolynomial& f, const RatPolynomial& g);

RatPolynomial remainder_mod_monic(const RatPolynomial& f, const RatPolynomial& g);

// Monic gcd; rejects gcd(0, 0).
RatPolynomial poly_gcd(const RatPolynomial& f, const RatPolynomial& g);

RatPolynomial make_monic(const RatPolynomial& f);

// Monic f / gcd(f, f'); rejects the zero polynomial.
RatPolynomial squarefree_part(const RatPolynomial& f);

struct Normalized {
    IntPolynomial numerator;
    Integer denominator; // least positive d with d*f in Z[X]
};

Normalized normalize(const RatPolynomial& f);

// Human-readable form in the variable X, e.g. "X^2 - X + 1", "1/2*X^4 + 1/2*X^2".
std::string to_text(const RatPolynomial& p);
std::string to_text(const IntPolynomial& p);

// Binomial coefficient polynomial X(X-1)...(X-k+1)/k!.
RatPolynomial binomial_polynomial(unsigned k);

} // namespace intval
