#include "intval/density.hpp"
#include "intval/errors.hpp"
#include "intval/membership.hpp"
#include "intval/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace intval;
using namespace intval::testing;

namespace {

RatPolynomial witness_f() { return rp({0, 0, q(1, 2), 0, q(1, 2)}); }

using Triple = std::array<std::uint64_t, 3>;

} // namespace

TEST_CASE("three_squares examples") {
    CHECK(three_squares(3).decomposition == Triple{1, 1, 1});
    CHECK_FALSE(three_squares(7).decomposition);
    CHECK(three_squares(11).decomposition == Triple{1, 1, 3});
    CHECK(three_squares(0).decomposition == Triple{0, 0, 0});
    CHECK(three_squares(1).decomposition == Triple{0, 0, 1});
    CHECK_FALSE(three_squares(28).decomposition);
    CHECK(all_three_squares(27) == std::vector<Triple>{{1, 1, 5}, {3, 3, 3}});
}

TEST_CASE("three_squares matches the 4^k(8m+7) criterion up to 2000") {
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        const auto t = three_squares(n);
        CHECK(t.decomposition.has_value() == !is_legendre_exception(n));
        if (t.decomposition) {
            const auto& a = *t.decomposition;
            CHECK(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] == n);
            CHECK((a[0] <= a[1] && a[1] <= a[2]));
        }
    }
    CHECK(is_legendre_exception(7));
    CHECK(is_legendre_exception(112));
    CHECK_FALSE(is_legendre_exception(14));
}

TEST_CASE("hurwitz_match examples") {
    const auto hur = builtin("hurwitz");
    const auto q1 = AlgebraElement(hur, quaternion_to_hurwitz({0, q(3, 5), q(4, 5), 0}));
    CHECK(minimal_polynomial_element(q1) == rp({1, 0, 1}));
    CHECK(hurwitz_match(q1) == AlgebraElement::basis(hur, 1));

    const auto w = AlgebraElement::basis(hur, 3);
    CHECK(hurwitz_match(w) == w);

    const auto half = AlgebraElement(hur, quaternion_to_hurwitz({q(1, 2), q(1, 2), q(1, 2), q(1, 2)}));
    CHECK(hurwitz_match(half) == w);

    CHECK_THROWS_AS(hurwitz_match(AlgebraElement::scalar(hur, 3)), InvalidArgument);
    CHECK_THROWS_AS(hurwitz_match(AlgebraElement(hur, quaternion_to_hurwitz({0, q(1, 2), 0, 0}))), InvalidArgument);
    CHECK_THROWS_AS(hurwitz_match(AlgebraElement::basis(builtin("lipschitz"), 1)), InvalidArgument);
}

TEST_CASE("hurwitz_match preserves the minimal polynomial") {
    const auto hur = builtin("hurwitz");
    Rng rng(61);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_integral_quaternion(hur, rng, 25);
        REQUIRE(is_integral_element(x));
        const auto y = hurwitz_match(x);
        CHECK(y.in_order());
        CHECK(minimal_polynomial_element(y) == minimal_polynomial_element(x));
    }
}

TEST_CASE("companion_family examples") {
    auto fam = companion_family(1, 1, false);
    std::vector<RatMatrix> got;
    while (auto c = fam.next()) got.push_back(c->second);
    CHECK(got == std::vector<RatMatrix>{RatMatrix::scalar(1, 1), RatMatrix::scalar(1, 0), RatMatrix::scalar(1, -1)});

    std::size_t count = 0;
    auto fam2 = companion_family(2, 1, false);
    while (auto c = fam2.next()) {
        ++count;
        CHECK(characteristic_polynomial(c->second) == to_rational(c->first));
    }
    CHECK(count == 9);

    bool has_cyclotomic = false;
    std::size_t kept = 0;
    auto fam3 = companion_family(2, 1, true);
    while (auto c = fam3.next()) {
        ++kept;
        has_cyclotomic = has_cyclotomic || c->first == IntPolynomial{1, 1, 1};
        CHECK(c->first != IntPolynomial{0, 0, 1});
        CHECK(c->first != IntPolynomial{-1, 0, 1});
    }
    CHECK(has_cyclotomic);
    CHECK(kept < 9);
    CHECK_THROWS_AS(companion_family(0, 1, false), InvalidArgument);
}

TEST_CASE("irreducibility filter is sound") {
    // Degree 2 and 3 irreducibility over Z is decidable by rational roots:
    // test integer divisors of the constant term.
    auto fam = companion_family(3, 3, true);
    while (auto c = fam.next()) {
        const auto& p = c->first;
        const Integer c0 = abs(p.coeff(0));
        if (c0 == 0) FAIL("reducible polynomial kept");
        for (Integer r = 1; r <= c0; ++r) {
            if (c0 % r != 0) continue;
            CHECK(p(r) != 0);
            CHECK(p(Integer(-r)) != 0);
        }
    }
    CHECK(irreducible_mod(IntPolynomial{1, 1, 1}, 2));
    CHECK_FALSE(irreducible_mod(IntPolynomial{1, 0, 1}, 2));
    CHECK(certified_irreducible(IntPolynomial{-2, 0, 1}));
    CHECK_FALSE(certified_irreducible(IntPolynomial{-1, 0, 1}));
}

TEST_CASE("triangular_spectrum examples") {
    CHECK(triangular_spectrum(RatMatrix({{1, 3, 4}, {0, 1, 5}, {0, 0, 2}})).poly() == rp({2, -3, 1}));
    CHECK(triangular_spectrum(RatMatrix(3)).poly() == X());
    CHECK(triangular_spectrum(RatMatrix({{0, 5}, {0, 0}})).poly() == X());
    CHECK_THROWS_AS(triangular_spectrum(RatMatrix({{0, 0}, {1, 0}})), InvalidArgument);
}

TEST_CASE("triangular matrices and binomial polynomials") {
    Rng rng(67);
    for (int t = 0; t < 60; ++t) {
        const auto m = random_upper_triangular(rng, static_cast<std::size_t>(uniform_int(rng, 1, 4)), 10);
        CHECK(triangular_spectrum(m) == spectrum(m));
        for (unsigned k = 0; k <= 6; ++k) CHECK(is_integral_matrix(eval_poly_matrix(binomial_polynomial(k), m)));
    }
    // f(X) = X/2 is not in Int(Z), and fails on the unit matrix.
    CHECK_FALSE(is_integral_matrix(eval_poly_matrix(rp({0, q(1, 2)}), RatMatrix::identity(3))));
}

TEST_CASE("density_refute examples") {
    const auto z3 = builtin("quadratic(-3)");
    const auto theta = AlgebraElement(z3, {q(1, 2), q(1, 2)});
    const std::vector<AlgebraElement> c1 = {theta};
    CHECK(density_refute(witness_f(), z3, c1) == theta);

    const auto lip = builtin("lipschitz");
    const auto alpha = AlgebraElement(lip, {q(1, 2), q(1, 2), q(1, 2), q(1, 2)});
    const std::vector<AlgebraElement> c2 = {alpha};
    CHECK(density_refute(witness_f(), lip, c2) == alpha);

    CHECK_FALSE(density_refute(X(), z3, c1));
    // member_int is no, so there is nothing to refute.
    CHECK_FALSE(density_refute(rp({0, q(1, 2)}), z3, c1));

    const std::vector<AlgebraElement> bad = {AlgebraElement(z3, {q(1, 2), 0})};
    CHECK_THROWS_AS(density_refute(X(), z3, bad), InvalidArgument);
    const std::vector<AlgebraElement> other = {AlgebraElement::unity(lip)};
    CHECK_THROWS_AS(density_refute(X(), z3, other), Mismatch);
}

TEST_CASE("spectrum_transfer_check examples") {
    const std::vector<std::pair<RatMatrix, RatMatrix>> p1 = {
        {companion(rp({0, -1, 1})), RatMatrix::diagonal({0, 1})}};
    const auto f = rp({0, q(-1, 2), q(1, 2)});
    CHECK(spectrum_transfer_check(f, p1));
    CHECK(is_integral_matrix(eval_poly_matrix(f, p1[0].first)));

    Rng rng(71);
    std::vector<std::pair<RatMatrix, RatMatrix>> same;
    std::vector<std::pair<RatMatrix, RatMatrix>> conj;
    for (int t = 0; t < 40; ++t) {
        const auto m = random_rat_matrix(rng, 3, 4, 3);
        same.emplace_back(m, m);
        const auto p = random_monic(rng, 3, 4);
        const auto c = companion(to_rational(p));
        const auto [u, uinv] = random_unimodular(rng, 3, 8, 2);
        CHECK(u * uinv == RatMatrix::identity(3));
        conj.emplace_back(c, u * c * uinv);
    }
    for (int t = 0; t < 20; ++t) {
        const auto g = random_rat_poly(rng, 4, 5, 4);
        CHECK(spectrum_transfer_check(g, same));
        CHECK(spectrum_transfer_check(g, conj));
    }
    const std::vector<std::pair<RatMatrix, RatMatrix>> unequal = {{RatMatrix::identity(2), RatMatrix(2)}};
    CHECK_THROWS_AS(spectrum_transfer_check(X(), unequal), InvalidArgument);
}
