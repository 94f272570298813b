#include "intval/errors.hpp"
#include "intval/polynomial.hpp"
#include "intval/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace intval;
using namespace intval::testing;

TEST_CASE("rationals parse reduced and print as num/den") {
    CHECK(to_string(parse_rational("6/-4")) == "-3/2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("polynomials keep canonical form") {
    const auto p = rp({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(to_text(rp({1, -1, 1})) == "X^2 - X + 1");
    CHECK(to_text(rp({0, 0, q(1, 2), 0, q(1, 2)})) == "1/2*X^4 + 1/2*X^2");
}

TEST_CASE("poly_divmod examples") {
    SUBCASE("one division step") {
        const auto [quo, rem] = poly_divmod(rp({1, -1, 1}), X());
        CHECK(quo == rp({-1, 1}));
        CHECK(rem == rp({1}));
    }
    SUBCASE("X^4 + X^2 mod X^2 - X + 1 is -1") {
        const auto [quo, rem] = poly_divmod(rp({0, 0, 1, 0, 1}), rp({1, -1, 1}));
        CHECK(rem == rp({-1}));
        CHECK(quo * rp({1, -1, 1}) + rem == rp({0, 0, 1, 0, 1}));
    }
    SUBCASE("zero dividend") {
        const auto [quo, rem] = poly_divmod(RatPolynomial{}, rp({0, 0, 1}));
        CHECK(quo.is_zero());
        CHECK(rem.is_zero());
    }
    SUBCASE("rejects non-monic or constant divisors") {
        CHECK_THROWS_AS(poly_divmod(X(), rp({1, 2})), InvalidArgument);
        CHECK_THROWS_AS(poly_divmod(X(), rp({1})), InvalidArgument);
        CHECK_THROWS_AS(poly_divmod(X(), RatPolynomial{}), InvalidArgument);
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(rp({-1, 0, 1}), rp({-1, 1})) == rp({-1, 1}));
    CHECK(poly_gcd(rp({0, 0, 1}), rp({0, 0, 0, 1})) == rp({0, 0, 1}));
    CHECK(poly_gcd(rp({1, -1, 1}), rp({0, -1, 1})) == rp({1}));
    CHECK(poly_gcd(rp({0, 2}), RatPolynomial{}) == X());
    CHECK_THROWS_AS(poly_gcd(RatPolynomial{}, RatPolynomial{}), InvalidArgument);
}

TEST_CASE("squarefree_part examples") {
    CHECK(squarefree_part(rp({0, 0, 1})) == X());
    // (X-1)^2 (X+2) = X^3 - 3X + 2
    CHECK(squarefree_part(rp({2, -3, 0, 1})) == rp({-2, 1, 1}));
    CHECK(squarefree_part(rp({1, -1, 1})) == rp({1, -1, 1}));
    CHECK(squarefree_part(rp({3})) == rp({1}));
    CHECK_THROWS_AS(squarefree_part(RatPolynomial{}), InvalidArgument);
}

TEST_CASE("normalize examples") {
    const auto a = normalize(rp({0, 0, q(1, 2), 0, q(1, 2)}));
    CHECK(a.numerator == IntPolynomial{0, 0, 1, 0, 1});
    CHECK(a.denominator == 2);
    const auto b = normalize(rp({-1, 1}));
    CHECK(b.numerator == IntPolynomial{-1, 1});
    CHECK(b.denominator == 1);
    const auto c = normalize(rp({q(1, 4), q(1, 6)}));
    CHECK(c.numerator == IntPolynomial{3, 2});
    CHECK(c.denominator == 12);
    CHECK(normalize(RatPolynomial{}).denominator == 1);
}

TEST_CASE("binomial polynomials take integer values on integers") {
    CHECK(binomial_polynomial(2) == rp({0, q(-1, 2), q(1, 2)}));
    for (unsigned k = 0; k <= 6; ++k) {
        for (long x = -10; x <= 10; ++x) CHECK(is_integer(binomial_polynomial(k)(Rational(x))));
    }
}

TEST_CASE("exact_core invariants on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = random_rat_poly(rng, 7, 9, 6);
        const auto g = to_rational(random_monic(rng, static_cast<int>(uniform_int(rng, 1, 4)), 5));
        const auto h = random_rat_poly(rng, 5, 9, 6);

        const auto [quo, rem] = poly_divmod(f, g);
        CHECK(g * quo + rem == f);
        CHECK(rem.degree() < g.degree());

        if (!(f.is_zero() && h.is_zero())) {
            const auto d = poly_gcd(f, h);
            CHECK(d.is_monic());
            CHECK(field_divmod(f, d).remainder.is_zero());
            CHECK(field_divmod(h, d).remainder.is_zero());
        }

        // Products with repeated factors exercise squarefree_part.
        const auto sq = g * g * to_rational(random_monic(rng, 1, 3));
        const auto s = squarefree_part(sq);
        CHECK(field_divmod(sq, s).remainder.is_zero());
        CHECK(poly_gcd(s, s.derivative()) == rp({1}));

        const auto [num, den] = normalize(f);
        CHECK(den > 0);
        CHECK(to_rational(num) == f * Rational(den));
        for (Integer smaller = 1; smaller < den; ++smaller) {
            if (den % smaller != 0) continue;
            CHECK_FALSE(has_integer_coeffs(f * Rational(smaller)));
        }
    }
}

TEST_CASE("composition matches pointwise evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_rat_poly(rng, 4, 5, 4);
        const auto h = random_rat_poly(rng, 3, 5, 4);
        const auto hf = h.compose(f);
        for (long x = -3; x <= 3; ++x) CHECK(hf(Rational(x)) == h(f(Rational(x))));
    }
}
