#include "intval/polynomial.hpp"

#include "intval/errors.hpp"

#include <sstream>

namespace intval {

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) c.emplace_back(z);
    return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        if (!is_integer(q)) throw InvalidArgument("polynomial has non-integer coefficient " + to_string(q));
        c.push_back(q.get_num());
    }
    return IntPolynomial(std::move(c));
}

bool has_integer_coeffs(const RatPolynomial& p) {
    for (const auto& q : p.coeffs()) {
        if (!is_integer(q)) return false;
    }
    return true;
}

DivMod field_divmod(const RatPolynomial& f, const RatPolynomial& g) {
    if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
    std::vector<Rational> rem = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {RatPolynomial{}, f};
    std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - dg + 1), Rational(0));
    const Rational lead_inv = 1 / g.leading();
    const auto& gc = g.coeffs();
    for (int k = f.degree(); k >= dg; --k) {
        const Rational t = rem[k] * lead_inv;
        if (t == 0) continue;
        quo[k - dg] = t;
        for (int i = 0; i <= dg; ++i) rem[k - dg + i] -= t * gc[i];
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

DivMod poly_divmod(const RatPolynomial& f, const RatPolynomial& g) {
    if (g.degree() < 1) throw InvalidArgument("divisor must have degree >= 1, got " + to_text(g));
    if (!g.is_monic()) throw InvalidArgument("divisor must be monic, got " + to_text(g));
    return field_divmod(f, g);
}

RatPolynomial remainder_mod_monic(const RatPolynomial& f, const RatPolynomial& g) {
    return poly_divmod(f, g).remainder;
}

RatPolynomial make_monic(const RatPolynomial& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.leading());
}

RatPolynomial poly_gcd(const RatPolynomial& f, const RatPolynomial& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
    RatPolynomial a = make_monic(f);
    RatPolynomial b = make_monic(g);
    while (!b.is_zero()) {
        RatPolynomial r = make_monic(field_divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RatPolynomial squarefree_part(const RatPolynomial& f) {
    if (f.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
    const RatPolynomial g = poly_gcd(f, f.derivative());
    return make_monic(field_divmod(f, g).quotient);
}

Normalized normalize(const RatPolynomial& f) {
    Integer d = 1;
    for (const auto& q : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> g;
    g.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) g.push_back(q.get_num() * (d / q.get_den()));
    return {IntPolynomial(std::move(g)), d};
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Coeff c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1) out << c.get_str() << '*';
        out << 'X';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

} // namespace

std::string to_text(const RatPolynomial& p) { return render(p); }

std::string to_text(const IntPolynomial& p) { return render(p); }

RatPolynomial binomial_polynomial(unsigned k) {
    RatPolynomial acc = RatPolynomial::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * RatPolynomial{Rational(-static_cast<long>(i)), Rational(1)};
        acc *= Rational(Integer(1), Integer(i + 1));
    }
    return acc;
}

} // namespace intval
