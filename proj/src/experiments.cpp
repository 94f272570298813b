#include "intval/experiments.hpp"

#include "intval/density.hpp"
#include "intval/errors.hpp"
#include "intval/membership.hpp"
#include "intval/sampling.hpp"

#include <functional>

namespace intval {

RatPolynomial non_dense_witness_poly() {
    const Rational h(1, 2);
    return RatPolynomial{0, 0, h, 0, h};
}

namespace {

class Assertions {
public:
    void check(const std::string& name, bool pass, Json detail = Json::object()) {
        all_pass_ = all_pass_ && pass;
        items_.push_back({{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
    }
    Json finish(Json report) {
        report["assertions"] = items_;
        report["all_pass"] = all_pass_;
        return report;
    }

private:
    Json items_ = Json::array();
    bool all_pass_ = true;
};

AlgebraElement elem(const OrderPtr& o, std::vector<Rational> c) { return AlgebraElement(o, std::move(c)); }

Json zsqrt3_example() {
    const auto f = non_dense_witness_poly();
    const auto a = builtin("quadratic(-3)");
    const auto a_closure = builtin("quadratic_half(-3)");
    const Rational h(1, 2);
    Assertions as;

    const auto in_a = member_int(f, a);
    as.check("member_int(f, Z[sqrt-3]) = yes", in_a.verdict == Verdict::Yes, verdict_to_json(in_a));

    const auto in_closure = member_int(f, a_closure);
    const auto theta = elem(a_closure, {0, 1});
    as.check("member_int(f, Z[theta]) = no", in_closure.verdict == Verdict::No, verdict_to_json(in_closure));
    as.check("witness is theta", in_closure.counterexample && *in_closure.counterexample == theta);

    const auto f_theta = eval_poly(f, theta);
    as.check("f(theta) = -1/2", f_theta == AlgebraElement::scalar(a_closure, Rational(-1, 2)),
             {{"f(theta)", element_to_text(f_theta)}});

    const auto theta_b = elem(a, {h, h});
    const auto mu = minimal_polynomial_element(theta_b);
    as.check("mu_theta = X^2 - X + 1", mu == RatPolynomial{1, -1, 1}, {{"mu", to_text(mu)}});
    const std::vector<AlgebraElement> cand{theta_b};
    const auto refuted = density_refute(f, a, cand);
    as.check("Z[sqrt-3] is not polynomially dense in its integral closure", refuted && *refuted == theta_b);

    return as.finish({{"example", "zsqrt3"}, {"f", poly_to_json(f)}, {"f_text", to_text(f)},
                      {"f_theta", element_to_json(f_theta)}, {"f_theta_text", element_to_text(f_theta)}});
}

Json lipschitz_example() {
    const auto f = non_dense_witness_poly();
    const auto l = builtin("lipschitz");
    const auto hw = builtin("hurwitz");
    const Rational h(1, 2);
    Assertions as;

    const auto in_l = member_int(f, l);
    as.check("member_int(f, Lipschitz) = yes", in_l.verdict == Verdict::Yes && in_l.checked_count == 16,
             verdict_to_json(in_l));

    // Mod 2, non-scalar Lipschitz elements have minimal polynomial X^2 or X^2 + 1.
    bool only_two = true;
    for (const auto& x : residues(l, 2)) {
        const auto mu = minimal_polynomial_element(x);
        if (mu.degree() < 2) continue;
        const auto c0 = mod_floor(mu.coeff(0).get_num(), 2);
        const auto c1 = mod_floor(mu.coeff(1).get_num(), 2);
        only_two = only_two && c1 == 0 && (c0 == 0 || c0 == 1);
    }
    as.check("non-scalar minimal polynomials mod 2 are X^2 or X^2 + 1", only_two);

    const auto alpha = elem(l, {h, h, h, h});
    const auto mu = minimal_polynomial_element(alpha);
    as.check("mu_alpha = X^2 - X + 1", mu == RatPolynomial{1, -1, 1}, {{"mu", to_text(mu)}});
    const auto f_alpha = eval_poly(f, alpha);
    as.check("f(alpha) = -1/2", f_alpha == AlgebraElement::scalar(l, Rational(-1, 2)));
    as.check("f(alpha) is not integral", !is_integral_element(f_alpha));

    const std::vector<AlgebraElement> cand{alpha};
    const auto refuted = density_refute(f, l, cand);
    as.check("Lipschitz order is not polynomially dense in its integral closure", refuted && *refuted == alpha);

    const std::vector<AlgebraElement> alpha_h{elem(hw, {0, 0, 0, 1})};
    const auto on_alpha = member_intval_on(f, alpha_h);
    as.check("f is not integral-valued at alpha in the Hurwitz order", on_alpha.verdict == Verdict::No,
             verdict_to_json(on_alpha));

    return as.finish({{"example", "lipschitz"}, {"f", poly_to_json(f)}, {"f_alpha_text", element_to_text(f_alpha)}});
}

Json hurwitz_example(std::uint64_t seed, std::uint64_t count) {
    const auto l = builtin("lipschitz");
    const auto hw = builtin("hurwitz");
    Assertions as;

    const auto i = AlgebraElement::basis(l, 1);
    const auto j = AlgebraElement::basis(l, 2);
    const auto k = AlgebraElement::basis(l, 3);
    as.check("ij = k = -ji", i * j == k && j * i == k * Rational(-1));

    const auto q = elem(hw, quaternion_to_hurwitz({0, Rational(3, 5), Rational(4, 5), 0}));
    const auto matched = hurwitz_match(q);
    as.check("(3/5)i + (4/5)j matches i", matched == AlgebraElement::basis(hw, 1),
             {{"q_prime", element_to_text(matched)}});

    Rng rng(seed);
    std::uint64_t failures = 0;
    for (std::uint64_t n = 0; n < count; ++n) {
        const auto x = random_integral_quaternion(hw, rng, 25);
        const auto y = hurwitz_match(x);
        const Quaternion qx = hurwitz_to_quaternion(x.coords());
        const Rational norm = qx[0] * qx[0] + qx[1] * qx[1] + qx[2] * qx[2] + qx[3] * qx[3];
        const RatPolynomial expect{norm, -2 * qx[0], 1};
        if (!y.in_order() || minimal_polynomial_element(y) != expect || minimal_polynomial_element(x) != expect) {
            ++failures;
        }
    }
    as.check("random integral quaternions match Hurwitz elements", failures == 0,
             {{"instances", count}, {"failures", failures}});
    return as.finish({{"example", "hurwitz"}, {"seed", seed}});
}

Json triangular_example(std::uint64_t seed, std::uint64_t count) {
    Assertions as;
    const auto f = binomial_polynomial(2);
    const auto t2 = builtin("triangular(2)");
    const auto in_t2 = member_int(f, t2);
    as.check("X(X-1)/2 is in Int(Z)", member_int(f, builtin("integers")).verdict == Verdict::Yes);
    as.check("X(X-1)/2 is not in Int(T_2(Z))", in_t2.verdict == Verdict::No, verdict_to_json(in_t2));

    Rng rng(seed);
    const auto t3 = builtin("triangular(3)");
    std::vector<AlgebraElement> sample;
    for (std::uint64_t n = 0; n < count; ++n) sample.push_back(random_element(t3, rng, 10));
    bool all = true;
    for (unsigned deg = 0; deg <= 6; ++deg) {
        all = all && member_intval_on(binomial_polynomial(deg), sample).verdict == Verdict::Yes;
    }
    as.check("binomial polynomials up to degree 6 are integral-valued on T_3(Z) samples", all);

    bool spectra = true;
    for (const auto& a : sample) {
        const auto m = regular_representation(a);
        spectra = spectra && triangular_spectrum(m) == spectrum(m);
    }
    as.check("diagonal spectrum equals spectrum", spectra);
    return as.finish({{"example", "triangular"}, {"seed", seed}});
}

Json companion_example(std::uint64_t seed, std::uint64_t count) {
    Assertions as;
    std::uint64_t n9 = 0;
    auto fam = companion_family(2, 1, false);
    while (fam.next()) ++n9;
    as.check("degree 2 height 1 family has 9 companions", n9 == 9);

    bool found = false;
    auto irr = companion_family(2, 1, true);
    while (auto e = irr.next()) found = found || e->first == IntPolynomial{1, 1, 1};
    as.check("X^2 + X + 1 is certified irreducible", found);

    Rng rng(seed);
    std::uint64_t failures = 0;
    for (std::uint64_t n = 0; n < count; ++n) {
        const int deg = static_cast<int>(uniform_int(rng, 1, 3));
        const auto p = random_monic(rng, deg, 4);
        const auto c = companion(to_rational(p));
        const auto [u, uinv] = random_unimodular(rng, static_cast<std::size_t>(deg), 6, 2);
        const std::vector<std::pair<RatMatrix, RatMatrix>> pair{{c, u * c * uinv}};
        if (!spectrum_transfer_check(random_rat_poly(rng, 4, 6, 4), pair)) ++failures;
    }
    as.check("integrality at a companion equals integrality at a conjugate", failures == 0,
             {{"instances", count}, {"failures", failures}});
    return as.finish({{"example", "companion"}, {"seed", seed}});
}

} // namespace

std::vector<std::string> example_names() { return {"zsqrt3", "hurwitz", "lipschitz", "triangular", "companion"}; }

Json example_report(std::string_view name, std::uint64_t seed, std::uint64_t count) {
    if (name == "zsqrt3") return zsqrt3_example();
    if (name == "lipschitz") return lipschitz_example();
    if (name == "hurwitz") return hurwitz_example(seed, count);
    if (name == "triangular") return triangular_example(seed, count);
    if (name == "companion") return companion_example(seed, count);
    throw InvalidArgument("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> density_checks() { return {"three-squares", "hurwitz", "triangular", "companion", "refute"}; }

Json density_report(std::string_view check, std::uint64_t seed, std::uint64_t count) {
    Json failures = Json::array();
    std::uint64_t instances = 0;
    Rng rng(seed);

    if (check == "three-squares") {
        for (std::uint64_t n = 0; n <= count; ++n, ++instances) {
            const auto t = three_squares(n);
            if (t.decomposition) {
                const auto& a = *t.decomposition;
                if (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] != n) failures.push_back({{"n", n}, {"reason", "bad triple"}});
            }
            if (t.decomposition.has_value() == is_legendre_exception(n)) {
                failures.push_back({{"n", n}, {"reason", "disagrees with 4^k(8m+7)"}});
            }
        }
    } else if (check == "hurwitz") {
        const auto hw = builtin("hurwitz");
        for (; instances < count; ++instances) {
            const auto x = random_integral_quaternion(hw, rng, 25);
            const auto y = hurwitz_match(x);
            if (!y.in_order() || minimal_polynomial_element(y) != minimal_polynomial_element(x)) {
                failures.push_back({{"q", element_to_json(x)}, {"q_prime", element_to_json(y)}});
            }
        }
    } else if (check == "triangular") {
        for (; instances < count; ++instances) {
            const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
            const auto m = random_upper_triangular(rng, n, 10);
            if (!(triangular_spectrum(m) == spectrum(m))) failures.push_back({{"matrix", matrix_to_json(m)}, {"k", -1}});
            for (unsigned k = 0; k <= 6; ++k) {
                if (!is_integral_matrix(eval_poly_matrix(binomial_polynomial(k), m))) {
                    failures.push_back({{"matrix", matrix_to_json(m)}, {"k", k}});
                }
            }
        }
    } else if (check == "companion") {
        for (; instances < count; ++instances) {
            const int deg = static_cast<int>(uniform_int(rng, 1, 3));
            const auto p = random_monic(rng, deg, 4);
            const auto f = random_rat_poly(rng, 4, 6, 4);
            const auto c = companion(to_rational(p));
            const auto [u, uinv] = random_unimodular(rng, static_cast<std::size_t>(deg), 6, 2);
            const std::vector<std::pair<RatMatrix, RatMatrix>> pair{{c, u * c * uinv}};
            if (!spectrum_transfer_check(f, pair)) {
                failures.push_back({{"p", poly_to_json(p)}, {"f", poly_to_json(f)}, {"conjugate", matrix_to_json(u * c * uinv)}});
            }
        }
    } else if (check == "refute") {
        const auto f = non_dense_witness_poly();
        const Rational h(1, 2);
        struct Case {
            OrderPtr order;
            std::vector<Rational> candidate;
            bool expect_witness;
        };
        const std::vector<Case> cases = {
            {builtin("quadratic(-3)"), {h, h}, true},
            {builtin("lipschitz"), {h, h, h, h}, true},
            {builtin("hurwitz"), {0, 0, 0, 1}, false},
        };
        for (const auto& c : cases) {
            ++instances;
            const std::vector<AlgebraElement> cand{AlgebraElement(c.order, c.candidate)};
            const auto w = density_refute(f, c.order, cand);
            if (w.has_value() != c.expect_witness) {
                failures.push_back({{"order", c.order->name()}, {"expected_witness", c.expect_witness}});
            }
        }
    } else {
        throw InvalidArgument("unknown density check '" + std::string(check) + "'");
    }
    return {{"check", std::string(check)}, {"seed", seed}, {"instances", instances}, {"failures", failures}};
}

} // namespace intval
