#include "intval/membership.hpp"

#include "intval/errors.hpp"
#include "intval/matrix.hpp"

#include <string>
#include <utility>

namespace intval {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    case Verdict::UnknownBounded:
        return "unknown-bounded";
    }
    return "unknown-bounded";
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

using Coords = std::vector<Integer>;

Coords mul_mod(const Order& o, const Coords& x, const Coords& y, const Integer& q) {
    const std::size_t r = o.rank();
    Coords out(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j] == 0) continue;
            const Integer xy = x[i] * y[j];
            for (std::size_t k = 0; k < r; ++k) {
                const Integer& c = o.constant(i, j, k);
                if (c != 0) out[k] += xy * c;
            }
        }
    }
    for (auto& z : out) z = mod_floor(z, q);
    return out;
}

// g(a) reduced mod qA, coordinates in [0, q).
Coords eval_mod(const Order& o, const IntPolynomial& g, const Coords& a, const Integer& q) {
    const std::size_t r = o.rank();
    Coords acc(r, Integer(0));
    const auto& c = g.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul_mod(o, acc, a, q);
        for (std::size_t k = 0; k < r; ++k) acc[k] = mod_floor(acc[k] + *it * o.unity()[k], q);
    }
    return acc;
}

bool all_zero(const Coords& v) {
    for (const auto& z : v) {
        if (z != 0) return false;
    }
    return true;
}

Integer power(const Integer& b, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

void require_common_order(std::span<const AlgebraElement> elements) {
    for (const auto& e : elements) require_same_order(elements.front(), e);
}

} // namespace

MembershipVerdict member_int(const RatPolynomial& f, const OrderPtr& order, std::uint64_t residue_limit) {
    MembershipVerdict out;
    if (f.degree() <= 0) {
        // f(a) = c * 1 for every a.
        const auto value = AlgebraElement::scalar(order, f.coeff(0));
        out.checked_count = 1;
        if (value.in_order()) {
            out.verdict = Verdict::Yes;
        } else {
            out.verdict = Verdict::No;
            out.counterexample = AlgebraElement::zero(order);
        }
        return out;
    }

    const auto [g, d] = normalize(f);
    if (d == 1) {
        out.verdict = Verdict::Yes;
        return out;
    }

    // Only the class of a mod dA matters: in g(a + d x) every term of the
    // expansion other than g(a) carries a factor d, and this holds in a
    // noncommutative A because the coefficients are central. By CRT, g(a)
    // in dA iff g(a) in p^e A for each p^e || d, and that depends only on a
    // mod p^e A.
    const auto factors = factor_integer(d);
    Integer total = 0;
    for (const auto& [p, e] : factors) total += power(power(p, e), order->rank());
    if (total > Integer(std::to_string(residue_limit))) {
        throw LimitExceeded("member_int would enumerate " + to_string(total) + " residue classes (limit " +
                            std::to_string(residue_limit) + ")");
    }

    for (const auto& [p, e] : factors) {
        const Integer q = power(p, e);
        ResidueStream stream(order, q);
        while (auto a = stream.next()) {
            Coords coords;
            coords.reserve(order->rank());
            for (const auto& c : a->coords()) coords.push_back(c.get_num());
            ++out.checked_count;
            if (!all_zero(eval_mod(*order, g, coords, q))) {
                out.verdict = Verdict::No;
                out.counterexample = std::move(*a);
                return out;
            }
        }
    }
    out.verdict = Verdict::Yes;
    return out;
}

MembershipVerdict member_intval_on(const RatPolynomial& f, std::span<const AlgebraElement> elements,
                                   bool whole_algebra_query) {
    if (elements.empty()) throw InvalidArgument("member_intval_on needs at least one element");
    require_common_order(elements);
    MembershipVerdict out;
    for (const auto& a : elements) {
        ++out.checked_count;
        const auto s = SpectrumPoly::of(minimal_polynomial_element(a));
        if (!image_spectrum(s, f).is_integral()) {
            out.verdict = Verdict::No;
            out.counterexample = a;
            return out;
        }
    }
    out.verdict = whole_algebra_query ? Verdict::UnknownBounded : Verdict::Yes;
    return out;
}

bool pullback_member(const RatPolynomial& f, const IntPolynomial& mu) {
    if (mu.degree() < 1 || !mu.is_monic()) {
        throw InvalidArgument("pullback modulus must be monic of degree >= 1, got " + to_text(mu));
    }
    return has_integer_coeffs(remainder_mod_monic(f, to_rational(mu)));
}

namespace {

IntPolynomial integral_minpoly(const AlgebraElement& a) {
    return to_integer(minimal_polynomial_element(a));
}

} // namespace

SampleCheck scaling_lemma_check(const RatPolynomial& f, const IntPolynomial& h, const OrderPtr& order,
                                std::span<const AlgebraElement> sample) {
    SampleCheck out;
    if (sample.empty()) return out;
    for (const auto& a : sample) {
        if (a.order() != order) throw Mismatch("sample element from order '" + a.order()->name() + "'");
        if (!a.in_order()) throw PreconditionFailed("sample element lies outside the order");
    }
    if (member_intval_on(f, sample).verdict != Verdict::Yes) {
        throw PreconditionFailed("f is not integral-valued on the sample");
    }
    const Integer d = normalize(f).denominator;
    const Integer scale = power(d, order->spectral_degree() - 1);
    const RatPolynomial scaled = to_rational(h).compose(f) * Rational(scale);
    for (const auto& a : sample) {
        ++out.checked;
        if (!pullback_member(scaled, integral_minpoly(a))) {
            out.holds = false;
            out.failure = a;
            return out;
        }
    }
    return out;
}

namespace {

// Balanced product keeps intermediate coefficient sizes even.
IntPolynomial product_of(std::vector<IntPolynomial> factors) {
    if (factors.empty()) return IntPolynomial::constant(Integer(1));
    while (factors.size() > 1) {
        std::vector<IntPolynomial> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
        factors = std::move(next);
    }
    return std::move(factors.front());
}

} // namespace

IntPolynomial certificate_phi(const RatPolynomial& f, const OrderPtr& order, std::uint64_t degree_limit) {
    const std::size_t n = order->spectral_degree();
    const Integer d = normalize(f).denominator;
    const Integer dn = power(d, n - 1);
    const Integer m = dn * dn;

    Integer total_degree = 0;
    for (std::size_t k = 1; k <= n; ++k) total_degree += power(m, k) * static_cast<unsigned long>(k);
    if (total_degree > Integer(std::to_string(degree_limit))) {
        throw LimitExceeded("certificate would have degree " + to_string(total_degree) + " (limit " +
                            std::to_string(degree_limit) + ")");
    }

    std::vector<IntPolynomial> factors;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Integer> c(k + 1, Integer(0));
        c[k] = 1;
        while (true) {
            factors.emplace_back(c);
            std::size_t i = 0;
            while (i < k) {
                if (++c[i] < m) break;
                c[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return product_of(std::move(factors));
}

SampleCheck verify_certificate(const IntPolynomial& phi, const RatPolynomial& f, const OrderPtr& order,
                               std::span<const AlgebraElement> sample) {
    if (!phi.is_monic()) throw InvalidArgument("certificate must be monic, got leading coefficient " + to_string(phi.leading()));
    SampleCheck out;
    const RatPolynomial composed = to_rational(phi).compose(f);
    for (const auto& a : sample) {
        if (a.order() != order) throw Mismatch("sample element from order '" + a.order()->name() + "'");
        const RatPolynomial mu = minimal_polynomial_element(a);
        if (!has_integer_coeffs(mu)) {
            ++out.skipped;
            continue;
        }
        ++out.checked;
        if (!pullback_member(composed, to_integer(mu))) {
            out.holds = false;
            out.failure = a;
            return out;
        }
    }
    return out;
}

ChainReport chain_check(const RatPolynomial& f, const OrderPtr& order, std::span<const AlgebraElement> sample) {
    if (sample.empty()) throw InvalidArgument("chain_check needs a nonempty sample");
    for (const auto& a : sample) {
        if (a.order() != order) throw Mismatch("sample element from order '" + a.order()->name() + "'");
        if (!a.in_order()) throw InvalidArgument("chain_check sample must come from the order (integer coordinates)");
    }
    ChainReport out;
    out.sample_size = sample.size();
    out.int_verdict = member_int(f, order);
    out.intval_verdict = member_intval_on(f, sample);

    if (out.int_verdict.verdict == Verdict::No) {
        const auto& w = *out.int_verdict.counterexample;
        if (eval_poly(f, w).in_order()) out.violations.push_back("member_int witness does not reproduce");
    }
    for (std::size_t idx = 0; idx < sample.size(); ++idx) {
        const auto& a = sample[idx];
        const bool pb = pullback_member(f, integral_minpoly(a));
        const auto value = eval_poly(f, a);
        const bool in_a = value.in_order();
        const bool integral = is_integral_element(value);
        out.pullback_on_sample = out.pullback_on_sample && pb;
        const std::string at = "sample[" + std::to_string(idx) + "]";
        if (pb && !in_a) out.violations.push_back(at + ": in pullback but f(a) not in A");
        if (in_a && !integral) out.violations.push_back(at + ": f(a) in A but not integral");
        if (out.int_verdict.verdict == Verdict::Yes && !in_a) {
            out.violations.push_back(at + ": member_int is yes but f(a) not in A");
        }
    }
    if (out.int_verdict.verdict == Verdict::Yes && out.intval_verdict.verdict != Verdict::Yes) {
        out.violations.push_back("member_int is yes but f is not integral-valued on the sample");
    }
    return out;
}

} // namespace intval
