#include "intval/errors.hpp"
#include "intval/membership.hpp"
#include "intval/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace intval;
using namespace intval::testing;

namespace {

RatPolynomial witness_f() { return rp({0, 0, q(1, 2), 0, q(1, 2)}); }
RatPolynomial half_choose2() { return rp({0, q(-1, 2), q(1, 2)}); }

AlgebraElement el(const OrderPtr& o, std::vector<Rational> c) { return AlgebraElement(o, std::move(c)); }

std::vector<AlgebraElement> sample(const OrderPtr& o, Rng& rng, std::size_t count, long bound) {
    std::vector<AlgebraElement> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_element(o, rng, bound));
    return out;
}

} // namespace

TEST_CASE("member_int examples") {
    const auto z3 = builtin("quadratic(-3)");
    const auto v1 = member_int(witness_f(), z3);
    CHECK(v1.verdict == Verdict::Yes);
    CHECK(v1.checked_count == 4);
    CHECK_FALSE(v1.counterexample);

    const auto zt = builtin("quadratic_half(-3)");
    const auto v2 = member_int(witness_f(), zt);
    CHECK(v2.verdict == Verdict::No);
    REQUIRE(v2.counterexample);
    CHECK(*v2.counterexample == AlgebraElement::basis(zt, 1));
    CHECK(eval_poly(witness_f(), *v2.counterexample) == AlgebraElement::scalar(zt, q(-1, 2)));

    CHECK(member_int(half_choose2(), builtin("integers")).verdict == Verdict::Yes);
    const auto v4 = member_int(witness_f(), builtin("lipschitz"));
    CHECK(v4.verdict == Verdict::Yes);
    CHECK(v4.checked_count == 16);

    CHECK(member_int(rp({0, q(1, 2)}), builtin("integers")).verdict == Verdict::No);
    CHECK(member_int(binomial_polynomial(4), builtin("integers")).verdict == Verdict::Yes);
    CHECK(member_int(rp({3, -1, 7}), builtin("hurwitz")).verdict == Verdict::Yes);
}

TEST_CASE("member_int constants and limits") {
    const auto z3 = builtin("quadratic(-3)");
    const auto half = member_int(rp({q(1, 2)}), z3);
    CHECK(half.verdict == Verdict::No);
    REQUIRE(half.counterexample);
    CHECK(member_int(rp({5}), z3).verdict == Verdict::Yes);
    CHECK(member_int(RatPolynomial(), z3).verdict == Verdict::Yes);
    CHECK_THROWS_AS(member_int(rp({0, q(1, 1009), 0, 0}) + rp({0, 0, q(1, 1013)}), builtin("lipschitz"), 1000),
                    LimitExceeded);
}

TEST_CASE("member_int agrees with exhaustive mod-d evaluation") {
    // Independent oracle: evaluate g over every residue mod d with the
    // library's exact element arithmetic and test divisibility by d.
    Rng rng(29);
    const std::vector<std::string> names = {"integers", "quadratic(-3)", "quadratic(-1)", "quadratic_half(-3)",
                                            "lipschitz", "matrix(2)"};
    for (const auto& name : names) {
        const auto o = builtin(name);
        for (int trial = 0; trial < 12; ++trial) {
            const auto f = random_rat_poly(rng, 4, 4, 4);
            const auto [g, d] = normalize(f);
            if (f.degree() <= 0 || d == 1) continue;
            bool oracle = true;
            for (const auto& a : residues(o, d)) {
                const auto v = eval_poly(to_rational(g), a);
                for (const auto& c : v.coords()) oracle = oracle && mpz_divisible_p(c.get_num_mpz_t(), d.get_mpz_t());
            }
            CAPTURE(name);
            CAPTURE(to_text(f));
            CHECK((member_int(f, o).verdict == Verdict::Yes) == oracle);
        }
    }
}

TEST_CASE("member_int soundness on random elements") {
    Rng rng(31);
    const std::vector<std::string> names = {"quadratic(-3)", "quadratic_half(-3)", "lipschitz", "hurwitz", "matrix(2)"};
    std::vector<RatPolynomial> polys = {witness_f(), half_choose2(), binomial_polynomial(3), rp({0, 0, q(1, 2), q(1, 2)})};
    for (int i = 0; i < 6; ++i) polys.push_back(random_rat_poly(rng, 3, 3, 3));
    for (const auto& name : names) {
        const auto o = builtin(name);
        for (const auto& f : polys) {
            const auto v = member_int(f, o);
            if (v.verdict == Verdict::Yes) {
                for (int t = 0; t < 200; ++t) CHECK(eval_poly(f, random_element(o, rng, 20)).in_order());
            } else {
                REQUIRE(v.verdict == Verdict::No);
                REQUIRE(v.counterexample);
                CHECK(v.counterexample->in_order());
                CHECK_FALSE(eval_poly(f, *v.counterexample).in_order());
            }
        }
    }
}

TEST_CASE("member_intval_on examples") {
    const auto hur = builtin("hurwitz");
    const std::vector<AlgebraElement> alpha = {AlgebraElement::basis(hur, 3)};
    const auto v = member_intval_on(witness_f(), alpha);
    CHECK(v.verdict == Verdict::No);
    REQUIRE(v.counterexample);
    CHECK(*v.counterexample == alpha[0]);
    CHECK(eval_poly(witness_f(), alpha[0]) == AlgebraElement::scalar(hur, q(-1, 2)));

    Rng rng(37);
    const auto z3 = builtin("quadratic(-3)");
    const auto xs = sample(z3, rng, 20, 9);
    CHECK(member_intval_on(X(), xs).verdict == Verdict::Yes);
    CHECK(member_intval_on(X(), xs, true).verdict == Verdict::UnknownBounded);

    const auto tri = builtin("triangular(3)");
    CHECK(member_intval_on(half_choose2(), sample(tri, rng, 50, 9)).verdict == Verdict::Yes);

    CHECK_THROWS_AS(member_intval_on(X(), std::vector<AlgebraElement>{}), InvalidArgument);
    const std::vector<AlgebraElement> mixed = {AlgebraElement::unity(z3), AlgebraElement::unity(hur)};
    CHECK_THROWS_AS(member_intval_on(X(), mixed), Mismatch);
}

TEST_CASE("spectral test agrees with direct integrality of f(a)") {
    Rng rng(41);
    for (const auto& name : {"quadratic(-3)", "lipschitz", "hurwitz", "matrix(2)", "triangular(2)"}) {
        const auto o = builtin(name);
        for (int t = 0; t < 40; ++t) {
            const auto a = random_element(o, rng, 6);
            const auto f = random_rat_poly(rng, 4, 4, 3);
            const bool direct = has_integer_coeffs(minimal_polynomial_element(eval_poly(f, a)));
            const bool spectral = image_spectrum(SpectrumPoly::of(minimal_polynomial_element(a)), f).is_integral();
            CHECK(direct == spectral);
            const std::vector<AlgebraElement> one = {a};
            CHECK((member_intval_on(f, one).verdict == Verdict::Yes) == direct);
        }
    }
}

TEST_CASE("pullback_member examples") {
    CHECK(pullback_member(half_choose2(), IntPolynomial{0, -1, 1}));
    CHECK_FALSE(pullback_member(witness_f(), IntPolynomial{1, -1, 1}));
    CHECK(remainder_mod_monic(witness_f(), rp({1, -1, 1})) == rp({q(-1, 2)}));
    CHECK_FALSE(pullback_member(rp({q(1, 2)}), IntPolynomial{0, 0, 1}));
    CHECK(pullback_member(rp({2, 3}), IntPolynomial{0, 0, 1}));
    CHECK_THROWS_AS(pullback_member(X(), IntPolynomial{1, 2}), InvalidArgument);
    CHECK_THROWS_AS(pullback_member(X(), IntPolynomial{3}), InvalidArgument);
}

TEST_CASE("scaling_lemma_check examples") {
    const auto z3 = builtin("quadratic(-3)");
    const auto mod4 = residues(z3, 4);
    CHECK(scaling_lemma_check(witness_f(), IntPolynomial{0, 1}, z3, mod4).holds);
    CHECK(scaling_lemma_check(witness_f(), IntPolynomial{0, 0, 1}, z3, mod4).holds);
    CHECK(scaling_lemma_check(X(), IntPolynomial{4, -7, 0, 2}, z3, mod4).holds);

    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        const auto h = random_monic(rng, static_cast<int>(uniform_int(rng, 0, 3)), 5) * Integer(uniform_int(rng, 1, 3));
        const auto r = scaling_lemma_check(witness_f(), h, z3, sample(z3, rng, 30, 12));
        CHECK(r.holds);
        CHECK(r.checked == 30);
    }
    // Matrix order: spectral degree 2, not rank 4.
    const auto m2 = builtin("matrix(2)");
    const auto null_mod2 = rp({0, -1, 0, 0, 1}) * rp({0, 0, -1, 0, 1}) * q(1, 2);
    REQUIRE(member_int(null_mod2, m2).verdict == Verdict::Yes);
    CHECK(scaling_lemma_check(null_mod2, IntPolynomial{0, 1}, m2, sample(m2, rng, 50, 8)).holds);
    // [[0,1],[1,1]] has mu = X^2 - X - 1 and f(mu root) = 1/2.
    const std::vector<AlgebraElement> fib = {el(m2, {0, 1, 1, 1})};
    CHECK_THROWS_AS(scaling_lemma_check(half_choose2(), IntPolynomial{0, 1}, m2, fib), PreconditionFailed);
}

TEST_CASE("scaling_lemma_check precondition errors") {
    const auto zt = builtin("quadratic_half(-3)");
    const std::vector<AlgebraElement> theta = {AlgebraElement::basis(zt, 1)};
    CHECK_THROWS_AS(scaling_lemma_check(witness_f(), IntPolynomial{0, 1}, zt, theta), PreconditionFailed);
    const auto z3 = builtin("quadratic(-3)");
    const std::vector<AlgebraElement> outside = {el(z3, {q(1, 2), 0})};
    CHECK_THROWS_AS(scaling_lemma_check(X(), IntPolynomial{0, 1}, z3, outside), PreconditionFailed);
}

TEST_CASE("certificate_phi examples") {
    const auto z3 = builtin("quadratic(-3)");
    const auto phi = certificate_phi(witness_f(), z3);
    CHECK(phi.degree() == 36);
    CHECK(phi.is_monic());

    // Oracle: the product assembled independently, factor by factor.
    IntPolynomial expect = IntPolynomial::constant(Integer(1));
    for (long c0 = 0; c0 < 4; ++c0) expect = expect * IntPolynomial{c0, 1};
    for (long c0 = 0; c0 < 4; ++c0)
        for (long c1 = 0; c1 < 4; ++c1) expect = expect * IntPolynomial{c0, c1, 1};
    CHECK(phi == expect);

    CHECK(certificate_phi(rp({1, 2, 3}), z3) == IntPolynomial{0, 0, 0, 1});
    CHECK(certificate_phi(X(), builtin("integers")) == IntPolynomial{0, 1});
    CHECK_THROWS_AS(certificate_phi(rp({0, q(1, 7)}), builtin("triangular(3)")), LimitExceeded);
}

TEST_CASE("verify_certificate examples") {
    const auto z3 = builtin("quadratic(-3)");
    const auto phi = certificate_phi(witness_f(), z3);
    const auto mod6 = residues(z3, 6);
    const auto r = verify_certificate(phi, witness_f(), z3, mod6);
    CHECK(r.holds);
    CHECK(r.checked == 36);

    Rng rng(47);
    CHECK(verify_certificate(IntPolynomial{0, 1}, X(), z3, sample(z3, rng, 20, 9)).holds);

    // X + 1 fails at theta, whose mu is X^2 - X + 1.
    const auto zt = builtin("quadratic_half(-3)");
    const std::vector<AlgebraElement> theta = {AlgebraElement::basis(zt, 1)};
    const auto bad = verify_certificate(IntPolynomial{1, 1}, witness_f(), zt, theta);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failure);
    CHECK(*bad.failure == theta[0]);

    const std::vector<AlgebraElement> non_integral = {el(z3, {q(1, 3), 0})};
    const auto skipped = verify_certificate(IntPolynomial{1, 1}, witness_f(), z3, non_integral);
    CHECK(skipped.holds);
    CHECK(skipped.skipped == 1);
    CHECK_THROWS_AS(verify_certificate(IntPolynomial{0, 2}, X(), z3, mod6), InvalidArgument);
}

TEST_CASE("chain_check examples") {
    Rng rng(53);
    const auto z3 = builtin("quadratic(-3)");
    const auto xs = sample(z3, rng, 60, 10);

    const auto sq = chain_check(rp({0, 0, 1}), z3, xs);
    CHECK(sq.pullback_on_sample);
    CHECK(sq.int_verdict.verdict == Verdict::Yes);
    CHECK(sq.intval_verdict.verdict == Verdict::Yes);
    CHECK(sq.violations.empty());

    const auto pf = chain_check(witness_f(), z3, xs);
    CHECK(pf.int_verdict.verdict == Verdict::Yes);
    CHECK(pf.intval_verdict.verdict == Verdict::Yes);
    CHECK(pf.violations.empty());
    // X^4 + X^2 = -6X - 4 mod X^2 - 2X + 4, so 1 + s lies in its pullback.
    const std::vector<AlgebraElement> one_plus_s = {el(z3, {1, 1})};
    CHECK(chain_check(witness_f(), z3, one_plus_s).pullback_on_sample);
    CHECK(pf.pullback_on_sample);

    const auto half = chain_check(rp({q(1, 2)}), z3, xs);
    CHECK_FALSE(half.pullback_on_sample);
    CHECK(half.int_verdict.verdict == Verdict::No);
    CHECK(half.intval_verdict.verdict == Verdict::No);
    CHECK(half.violations.empty());

    const std::vector<AlgebraElement> outside = {el(z3, {q(1, 2), q(1, 2)})};
    CHECK_THROWS_AS(chain_check(X(), z3, outside), InvalidArgument);
}

TEST_CASE("matrix(2): member_int yes implies every sampled pullback") {
    Rng rng(59);
    const auto m2 = builtin("matrix(2)");
    std::vector<RatPolynomial> polys = {rp({0, -1, 0, 0, 1}) * rp({0, 0, -1, 0, 1}) * q(1, 2), half_choose2(), witness_f(), binomial_polynomial(4),
                                        rp({0, 0, q(1, 2), q(1, 2)}), rp({0, q(-1, 3), 0, q(1, 3)})};
    for (int i = 0; i < 8; ++i) polys.push_back(random_rat_poly(rng, 4, 3, 2));
    int yes = 0;
    for (const auto& f : polys) {
        if (member_int(f, m2).verdict != Verdict::Yes) continue;
        ++yes;
        for (int t = 0; t < 80; ++t) {
            const auto a = random_element(m2, rng, 15);
            CHECK(pullback_member(f, to_integer(minimal_polynomial_element(a))));
        }
    }
    CHECK(yes >= 3);
}

TEST_CASE("factor_integer") {
    CHECK(factor_integer(360) == std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factor_integer(1).empty());
    CHECK(factor_integer(97) == std::vector<std::pair<Integer, unsigned>>{{97, 1}});
}
