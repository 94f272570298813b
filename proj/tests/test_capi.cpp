#include "intval/intval.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

// Owns a char* result.
std::string take(char* s) {
    std::string out = s ? s : "";
    iv_string_free(s);
    return out;
}

iv_poly* poly(const char* text) {
    iv_poly* p = nullptr;
    REQUIRE(iv_poly_from_json(text, &p) == IV_OK);
    return p;
}

std::string poly_json(const iv_poly* p) {
    char* s = nullptr;
    REQUIRE(iv_poly_to_json(p, &s) == IV_OK);
    return take(s);
}

const char* kWitnessF = R"(["0","0","1/2","0","1/2"])";

} // namespace

TEST_CASE("capi polynomial round trip and errors") {
    iv_poly* f = poly(kWitnessF);
    CHECK(poly_json(f) == R"(["0","0","1/2","0","1/2"])");
    char* text = nullptr;
    REQUIRE(iv_poly_to_text(f, &text) == IV_OK);
    CHECK(take(text) == "1/2*X^4 + 1/2*X^2");

    iv_poly* g = nullptr;
    char* d = nullptr;
    REQUIRE(iv_poly_normalize(f, &g, &d) == IV_OK);
    CHECK(take(d) == "2");
    CHECK(poly_json(g) == R"(["0","0","1","0","1"])");

    iv_poly* mu = poly(R"([1,-1,1])");
    iv_poly* quo = nullptr;
    iv_poly* rem = nullptr;
    REQUIRE(iv_poly_divmod(g, mu, &quo, &rem) == IV_OK);
    CHECK(poly_json(rem) == R"(["-1"])");

    iv_poly* bad = nullptr;
    CHECK(iv_poly_from_json("[1, ", &bad) == IV_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::string(iv_last_error()).find("JSON") != std::string::npos);
    CHECK(iv_poly_from_json(R"(["1/0"])", &bad) == IV_ERR_INVALID_ARGUMENT);
    CHECK(iv_poly_from_json(nullptr, &bad) == IV_ERR_INVALID_ARGUMENT);
    iv_poly* two = poly("[0, 2]");
    CHECK(iv_poly_divmod(f, two, &quo, &rem) == IV_ERR_INVALID_ARGUMENT);
    CHECK(std::string(iv_status_name(IV_ERR_LIMIT)) == "limit-exceeded");

    for (auto* p : {f, g, mu, quo, rem, two}) iv_poly_free(p);
}

TEST_CASE("capi matrices") {
    iv_matrix* m = nullptr;
    REQUIRE(iv_matrix_from_json(R"([[0,"1/2"],[0,0]])", &m) == IV_OK);
    iv_poly* mu = nullptr;
    REQUIRE(iv_matrix_minpoly(m, &mu) == IV_OK);
    CHECK(poly_json(mu) == R"(["0","0","1"])");
    int integral = -1;
    REQUIRE(iv_matrix_is_integral(m, &integral) == IV_OK);
    CHECK(integral == 1);

    iv_matrix* sum = nullptr;
    REQUIRE(iv_matrix_from_json(R"([["3/2","1/2"],["1/2","1/2"]])", &sum) == IV_OK);
    REQUIRE(iv_matrix_is_integral(sum, &integral) == IV_OK);
    CHECK(integral == 0);

    iv_matrix* rag = nullptr;
    CHECK(iv_matrix_from_json(R"([[1,2],[3]])", &rag) == IV_ERR_INVALID_ARGUMENT);

    iv_poly* s = poly("[1,-1,1]");
    iv_poly* f = poly(kWitnessF);
    iv_poly* img = nullptr;
    REQUIRE(iv_image_spectrum(s, f, &img) == IV_OK);
    CHECK(poly_json(img) == R"(["1/2","1"])");
    iv_matrix* c = nullptr;
    REQUIRE(iv_companion(s, &c) == IV_OK);
    char* cj = nullptr;
    REQUIRE(iv_matrix_to_json(c, &cj) == IV_OK);
    CHECK(json::parse(take(cj)) == json::parse(R"([["0","-1"],["1","1"]])"));

    iv_poly* sq = poly("[0,0,1]");
    CHECK(iv_image_spectrum(sq, f, &img) == IV_ERR_INVALID_ARGUMENT);

    iv_matrix_free(m);
    iv_matrix_free(sum);
    iv_matrix_free(c);
    for (auto* p : {mu, s, f, img, sq}) iv_poly_free(p);
}

TEST_CASE("capi orders, elements and membership") {
    iv_order* z3 = nullptr;
    REQUIRE(iv_order_builtin("quadratic(-3)", &z3) == IV_OK);
    iv_order* zt = nullptr;
    REQUIRE(iv_order_builtin("quadratic_half(-3)", &zt) == IV_OK);
    iv_order* nope = nullptr;
    CHECK(iv_order_builtin("octonions", &nope) == IV_ERR_INVALID_ARGUMENT);

    iv_poly* f = poly(kWitnessF);
    char* v = nullptr;
    REQUIRE(iv_member_int(f, z3, &v) == IV_OK);
    CHECK(json::parse(take(v))["verdict"] == "yes");
    REQUIRE(iv_member_int(f, zt, &v) == IV_OK);
    const auto no = json::parse(take(v));
    CHECK(no["verdict"] == "no");
    CHECK(no["witness"] == json::parse(R"(["0","1"])"));

    iv_element* theta = nullptr;
    REQUIRE(iv_element_from_json(zt, R"([0,1])", &theta) == IV_OK);
    iv_element* ft = nullptr;
    REQUIRE(iv_element_eval(f, theta, &ft) == IV_OK);
    char* t = nullptr;
    REQUIRE(iv_element_to_text(ft, &t) == IV_OK);
    CHECK(take(t) == "-1/2");

    iv_element* wrong = nullptr;
    iv_element* s = nullptr;
    REQUIRE(iv_element_from_json(z3, R"([0,1])", &s) == IV_OK);
    CHECK(iv_element_mul(theta, s, &wrong) == IV_ERR_MISMATCH);

    char* res = nullptr;
    REQUIRE(iv_residues(z3, "6", &res) == IV_OK);
    const std::string mod6 = take(res);
    CHECK(json::parse(mod6).size() == 36);
    iv_poly* phi = nullptr;
    REQUIRE(iv_certificate_phi(f, z3, &phi) == IV_OK);
    int deg = 0;
    REQUIRE(iv_poly_degree(phi, &deg) == IV_OK);
    CHECK(deg == 36);
    char* ver = nullptr;
    REQUIRE(iv_verify_certificate(phi, f, z3, mod6.c_str(), &ver) == IV_OK);
    CHECK(json::parse(take(ver))["holds"] == true);

    char* sample = nullptr;
    REQUIRE(iv_random_elements(z3, 0, 50, 10, &sample) == IV_OK);
    const std::string xs = take(sample);
    char* chain = nullptr;
    REQUIRE(iv_chain_check(f, z3, xs.c_str(), &chain) == IV_OK);
    CHECK(json::parse(take(chain))["implications_intact"] == true);

    char* pre = nullptr;
    iv_poly* h = poly("[0,1]");
    CHECK(iv_scaling_lemma_check(f, h, zt, R"([[0,1]])", &pre) == IV_ERR_PRECONDITION);
    CHECK(iv_member_intval_on(f, z3, "[]", 0, &pre) == IV_ERR_INVALID_ARGUMENT);
    CHECK(iv_member_intval_on(f, z3, "[[1,2,3]]", 0, &pre) == IV_ERR_MISMATCH);

    iv_order* tri = nullptr;
    REQUIRE(iv_order_builtin("triangular(3)", &tri) == IV_OK);
    iv_poly* x7 = poly(R"([0,"1/7"])");
    CHECK(iv_certificate_phi(x7, tri, &phi) == IV_ERR_LIMIT);

    iv_element_free(theta);
    iv_element_free(ft);
    iv_element_free(s);
    for (auto* p : {f, phi, h, x7}) iv_poly_free(p);
    for (auto* o : {z3, zt, tri}) iv_order_free(o);
}

TEST_CASE("capi density and reports") {
    char* out = nullptr;
    REQUIRE(iv_three_squares(11, &out) == IV_OK);
    CHECK(json::parse(take(out)) == json::parse(R"({"n":11,"decomposition":[1,1,3]})"));
    REQUIRE(iv_three_squares(7, &out) == IV_OK);
    CHECK(json::parse(take(out))["decomposition"].is_null());

    iv_order* hur = nullptr;
    REQUIRE(iv_order_builtin("hurwitz", &hur) == IV_OK);
    iv_element* q = nullptr;
    // (3/5)i + (4/5)j in the basis 1, i, j, w.
    REQUIRE(iv_element_from_json(hur, R"(["0","3/5","4/5","0"])", &q) == IV_OK);
    iv_element* m = nullptr;
    REQUIRE(iv_hurwitz_match(q, &m) == IV_OK);
    char* mj = nullptr;
    REQUIRE(iv_element_to_json(m, &mj) == IV_OK);
    CHECK(json::parse(take(mj)) == json::parse(R"(["0","1","0","0"])"));

    REQUIRE(iv_companion_family(2, 1, 0, &out) == IV_OK);
    CHECK(json::parse(take(out)).size() == 9);

    int same = 0;
    iv_poly* f = poly(R"([0,"-1/2","1/2"])");
    REQUIRE(iv_spectrum_transfer_check(f, R"([[[[0,0],[1,1]],[[0,0],[0,1]]]])", &same) == IV_OK);
    CHECK(same == 1);
    CHECK(iv_spectrum_transfer_check(f, R"([[[[1]],[[2]]]])", &same) == IV_ERR_INVALID_ARGUMENT);

    REQUIRE(iv_example_report("zsqrt3", 0, 10, &out) == IV_OK);
    CHECK(json::parse(take(out))["all_pass"] == true);
    REQUIRE(iv_density_report("refute", 0, 10, &out) == IV_OK);
    CHECK(json::parse(take(out))["failures"].empty());
    CHECK(iv_density_report("bogus", 0, 10, &out) == IV_ERR_INVALID_ARGUMENT);

    iv_element_free(q);
    iv_element_free(m);
    iv_poly_free(f);
    iv_order_free(hur);
}
