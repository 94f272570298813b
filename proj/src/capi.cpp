#include "intval/intval.h"

#include "intval/density.hpp"
#include "intval/errors.hpp"
#include "intval/experiments.hpp"
#include "intval/membership.hpp"
#include "intval/sampling.hpp"
#include "intval/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct iv_poly {
    intval::RatPolynomial p;
};
struct iv_matrix {
    intval::RatMatrix m;
};
struct iv_order {
    intval::OrderPtr o;
};
struct iv_element {
    intval::AlgebraElement x;
};

namespace {

using namespace intval;

thread_local std::string g_last_error;

struct NullArgument {};

template <class F>
iv_status guard(F&& body) {
    try {
        body();
        g_last_error.clear();
        return IV_OK;
    } catch (const NullArgument&) {
        g_last_error = "null argument";
        return IV_ERR_INVALID_ARGUMENT;
    } catch (const Json::parse_error& e) {
        g_last_error = std::string("malformed JSON: ") + e.what();
        return IV_ERR_PARSE;
    } catch (const Json::exception& e) {
        g_last_error = std::string("unexpected JSON shape: ") + e.what();
        return IV_ERR_PARSE;
    } catch (const Mismatch& e) {
        g_last_error = e.what();
        return IV_ERR_MISMATCH;
    } catch (const PreconditionFailed& e) {
        g_last_error = e.what();
        return IV_ERR_PRECONDITION;
    } catch (const LimitExceeded& e) {
        g_last_error = e.what();
        return IV_ERR_LIMIT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return IV_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return IV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal error: ") + e.what();
        return IV_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "internal error";
        return IV_ERR_INTERNAL;
    }
}

template <class... T>
void need(const T*... ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const Json& j) { *out = dup(j.dump()); }
void put(iv_poly** out, RatPolynomial p) { *out = new iv_poly{std::move(p)}; }
void put(iv_poly** out, const IntPolynomial& p) { *out = new iv_poly{to_rational(p)}; }
void put(iv_matrix** out, RatMatrix m) { *out = new iv_matrix{std::move(m)}; }
void put(iv_element** out, AlgebraElement x) { *out = new iv_element{std::move(x)}; }

std::vector<AlgebraElement> elements(const iv_order* o, const char* json) {
    return elements_from_json(o->o, Json::parse(json));
}

} // namespace

extern "C" {

const char* iv_last_error(void) { return g_last_error.c_str(); }

const char* iv_status_name(iv_status s) {
    switch (s) {
    case IV_OK:
        return "ok";
    case IV_ERR_INVALID_ARGUMENT:
        return "invalid-argument";
    case IV_ERR_PARSE:
        return "parse-error";
    case IV_ERR_MISMATCH:
        return "mismatch";
    case IV_ERR_PRECONDITION:
        return "precondition-failed";
    case IV_ERR_LIMIT:
        return "limit-exceeded";
    case IV_ERR_INTERNAL:
        return "internal-error";
    }
    return "unknown";
}

const char* iv_version(void) { return "0.1.0"; }

void iv_string_free(char* s) { std::free(s); }

iv_status iv_poly_from_json(const char* json, iv_poly** out) {
    return guard([&] {
        need(json, out);
        put(out, poly_from_json(Json::parse(json)));
    });
}

iv_status iv_poly_to_json(const iv_poly* p, char** out) {
    return guard([&] {
        need(p, out);
        put(out, poly_to_json(p->p));
    });
}

iv_status iv_poly_to_text(const iv_poly* p, char** out) {
    return guard([&] {
        need(p, out);
        *out = dup(to_text(p->p));
    });
}

iv_status iv_poly_clone(const iv_poly* p, iv_poly** out) {
    return guard([&] {
        need(p, out);
        put(out, p->p);
    });
}

iv_status iv_poly_degree(const iv_poly* p, int* out) {
    return guard([&] {
        need(p, out);
        *out = p->p.degree();
    });
}

iv_status iv_poly_equal(const iv_poly* a, const iv_poly* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = a->p == b->p;
    });
}

void iv_poly_free(iv_poly* p) { delete p; }

iv_status iv_poly_divmod(const iv_poly* f, const iv_poly* g, iv_poly** quotient, iv_poly** remainder) {
    return guard([&] {
        need(f, g, quotient, remainder);
        auto r = poly_divmod(f->p, g->p);
        put(quotient, std::move(r.quotient));
        put(remainder, std::move(r.remainder));
    });
}

iv_status iv_poly_gcd(const iv_poly* f, const iv_poly* g, iv_poly** out) {
    return guard([&] {
        need(f, g, out);
        put(out, poly_gcd(f->p, g->p));
    });
}

iv_status iv_poly_squarefree(const iv_poly* f, iv_poly** out) {
    return guard([&] {
        need(f, out);
        put(out, squarefree_part(f->p));
    });
}

iv_status iv_poly_normalize(const iv_poly* f, iv_poly** g, char** d) {
    return guard([&] {
        need(f, g, d);
        const auto n = normalize(f->p);
        *d = dup(to_string(n.denominator));
        put(g, n.numerator);
    });
}

iv_status iv_poly_binomial(unsigned k, iv_poly** out) {
    return guard([&] {
        need(out);
        put(out, binomial_polynomial(k));
    });
}

iv_status iv_matrix_from_json(const char* json, iv_matrix** out) {
    return guard([&] {
        need(json, out);
        put(out, matrix_from_json(Json::parse(json)));
    });
}

iv_status iv_matrix_to_json(const iv_matrix* m, char** out) {
    return guard([&] {
        need(m, out);
        put(out, matrix_to_json(m->m));
    });
}

iv_status iv_matrix_dim(const iv_matrix* m, int* out) {
    return guard([&] {
        need(m, out);
        *out = static_cast<int>(m->m.dim());
    });
}

void iv_matrix_free(iv_matrix* m) { delete m; }

iv_status iv_matrix_minpoly(const iv_matrix* m, iv_poly** out) {
    return guard([&] {
        need(m, out);
        put(out, minimal_polynomial(m->m));
    });
}

iv_status iv_matrix_charpoly(const iv_matrix* m, iv_poly** out) {
    return guard([&] {
        need(m, out);
        put(out, characteristic_polynomial(m->m));
    });
}

iv_status iv_matrix_eval(const iv_poly* f, const iv_matrix* m, iv_matrix** out) {
    return guard([&] {
        need(f, m, out);
        put(out, eval_poly_matrix(f->p, m->m));
    });
}

iv_status iv_matrix_is_integral(const iv_matrix* m, int* out) {
    return guard([&] {
        need(m, out);
        *out = is_integral_matrix(m->m);
    });
}

iv_status iv_matrix_spectrum(const iv_matrix* m, iv_poly** out) {
    return guard([&] {
        need(m, out);
        put(out, spectrum(m->m).poly());
    });
}

iv_status iv_image_spectrum(const iv_poly* s, const iv_poly* f, iv_poly** out) {
    return guard([&] {
        need(s, f, out);
        put(out, image_spectrum(SpectrumPoly(s->p), f->p).poly());
    });
}

iv_status iv_companion(const iv_poly* p, iv_matrix** out) {
    return guard([&] {
        need(p, out);
        put(out, companion(p->p));
    });
}

iv_status iv_order_builtin(const char* name, iv_order** out) {
    return guard([&] {
        need(name, out);
        *out = new iv_order{builtin(name)};
    });
}

iv_status iv_order_from_json(const char* json, iv_order** out) {
    return guard([&] {
        need(json, out);
        *out = new iv_order{order_from_json(Json::parse(json))};
    });
}

iv_status iv_order_to_json(const iv_order* o, char** out) {
    return guard([&] {
        need(o, out);
        put(out, order_to_json(*o->o));
    });
}

iv_status iv_order_rank(const iv_order* o, int* out) {
    return guard([&] {
        need(o, out);
        *out = static_cast<int>(o->o->rank());
    });
}

iv_status iv_order_spectral_degree(const iv_order* o, int* out) {
    return guard([&] {
        need(o, out);
        *out = static_cast<int>(o->o->spectral_degree());
    });
}

iv_status iv_order_builtin_names(char** out) {
    return guard([&] {
        need(out);
        std::string s;
        for (const auto& n : builtin_names()) s += n + "\n";
        *out = dup(s);
    });
}

void iv_order_free(iv_order* o) { delete o; }

iv_status iv_element_from_json(const iv_order* o, const char* json, iv_element** out) {
    return guard([&] {
        need(o, json, out);
        put(out, element_from_json(o->o, Json::parse(json)));
    });
}

iv_status iv_element_to_json(const iv_element* x, char** out) {
    return guard([&] {
        need(x, out);
        put(out, element_to_json(x->x));
    });
}

iv_status iv_element_to_text(const iv_element* x, char** out) {
    return guard([&] {
        need(x, out);
        *out = dup(element_to_text(x->x));
    });
}

iv_status iv_element_equal(const iv_element* a, const iv_element* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = a->x == b->x;
    });
}

void iv_element_free(iv_element* x) { delete x; }

iv_status iv_element_mul(const iv_element* x, const iv_element* y, iv_element** out) {
    return guard([&] {
        need(x, y, out);
        put(out, x->x * y->x);
    });
}

iv_status iv_element_eval(const iv_poly* f, const iv_element* x, iv_element** out) {
    return guard([&] {
        need(f, x, out);
        put(out, eval_poly(f->p, x->x));
    });
}

iv_status iv_element_minpoly(const iv_element* x, iv_poly** out) {
    return guard([&] {
        need(x, out);
        put(out, minimal_polynomial_element(x->x));
    });
}

iv_status iv_element_is_integral(const iv_element* x, int* out) {
    return guard([&] {
        need(x, out);
        *out = is_integral_element(x->x);
    });
}

iv_status iv_element_in_order(const iv_element* x, int* out) {
    return guard([&] {
        need(x, out);
        *out = x->x.in_order();
    });
}

iv_status iv_element_regular_rep(const iv_element* x, iv_matrix** out) {
    return guard([&] {
        need(x, out);
        put(out, regular_representation(x->x));
    });
}

iv_status iv_residues(const iv_order* o, const char* modulus, char** out) {
    return guard([&] {
        need(o, modulus, out);
        const Integer m = parse_integer(modulus);
        ResidueStream stream(o->o, m);
        Json list = Json::array();
        while (auto a = stream.next()) list.push_back(element_to_json(*a));
        put(out, list);
    });
}

iv_status iv_random_elements(const iv_order* o, uint64_t seed, uint64_t count, long bound, char** out) {
    return guard([&] {
        need(o, out);
        if (bound < 0) throw InvalidArgument("bound must be >= 0");
        Rng rng(seed);
        Json list = Json::array();
        for (uint64_t i = 0; i < count; ++i) list.push_back(element_to_json(random_element(o->o, rng, bound)));
        put(out, list);
    });
}

iv_status iv_random_integral_quaternions(const iv_order* hurwitz, uint64_t seed, uint64_t count, long bound,
                                         char** out) {
    return guard([&] {
        need(hurwitz, out);
        if (hurwitz->o->name() != "hurwitz") throw InvalidArgument("random quaternions need the hurwitz order");
        if (bound < 1) throw InvalidArgument("bound must be >= 1");
        Rng rng(seed);
        Json list = Json::array();
        for (uint64_t i = 0; i < count; ++i) {
            list.push_back(element_to_json(random_integral_quaternion(hurwitz->o, rng, bound)));
        }
        put(out, list);
    });
}

iv_status iv_member_int(const iv_poly* f, const iv_order* o, char** out) {
    return guard([&] {
        need(f, o, out);
        put(out, verdict_to_json(member_int(f->p, o->o)));
    });
}

iv_status iv_member_intval_on(const iv_poly* f, const iv_order* o, const char* elements_json,
                              int whole_algebra_query, char** out) {
    return guard([&] {
        need(f, o, elements_json, out);
        const auto xs = elements(o, elements_json);
        put(out, verdict_to_json(member_intval_on(f->p, xs, whole_algebra_query != 0)));
    });
}

iv_status iv_pullback_member(const iv_poly* f, const iv_poly* mu, int* out) {
    return guard([&] {
        need(f, mu, out);
        if (!has_integer_coeffs(mu->p)) throw InvalidArgument("pullback modulus needs integer coefficients");
        *out = pullback_member(f->p, to_integer(mu->p));
    });
}

iv_status iv_scaling_lemma_check(const iv_poly* f, const iv_poly* h, const iv_order* o, const char* elements_json,
                                 char** out) {
    return guard([&] {
        need(f, h, o, elements_json, out);
        if (!has_integer_coeffs(h->p)) throw InvalidArgument("h needs integer coefficients");
        const auto xs = elements(o, elements_json);
        put(out, sample_check_to_json(scaling_lemma_check(f->p, to_integer(h->p), o->o, xs)));
    });
}

iv_status iv_certificate_phi(const iv_poly* f, const iv_order* o, iv_poly** out) {
    return guard([&] {
        need(f, o, out);
        put(out, certificate_phi(f->p, o->o));
    });
}

iv_status iv_verify_certificate(const iv_poly* phi, const iv_poly* f, const iv_order* o, const char* elements_json,
                                char** out) {
    return guard([&] {
        need(phi, f, o, elements_json, out);
        if (!has_integer_coeffs(phi->p)) throw InvalidArgument("certificate needs integer coefficients");
        const auto xs = elements(o, elements_json);
        put(out, sample_check_to_json(verify_certificate(to_integer(phi->p), f->p, o->o, xs)));
    });
}

iv_status iv_chain_check(const iv_poly* f, const iv_order* o, const char* elements_json, char** out) {
    return guard([&] {
        need(f, o, elements_json, out);
        const auto xs = elements(o, elements_json);
        put(out, chain_report_to_json(chain_check(f->p, o->o, xs)));
    });
}

iv_status iv_three_squares(uint64_t n, char** out) {
    return guard([&] {
        need(out);
        const auto t = three_squares(n);
        Json j = {{"n", n}, {"decomposition", nullptr}};
        if (t.decomposition) j["decomposition"] = *t.decomposition;
        put(out, j);
    });
}

iv_status iv_hurwitz_match(const iv_element* q, iv_element** out) {
    return guard([&] {
        need(q, out);
        put(out, hurwitz_match(q->x));
    });
}

iv_status iv_hurwitz_from_quaternion(const iv_order* hurwitz, const char* json, iv_element** out) {
    return guard([&] {
        need(hurwitz, json, out);
        if (hurwitz->o->name() != "hurwitz") throw InvalidArgument("quaternion coordinates need the hurwitz order");
        const Json j = Json::parse(json);
        if (!j.is_array() || j.size() != 4) throw InvalidArgument("quaternion needs 4 coordinates, got " + j.dump());
        Quaternion q;
        for (std::size_t i = 0; i < 4; ++i) q[i] = rational_from_json(j[i]);
        put(out, AlgebraElement(hurwitz->o, quaternion_to_hurwitz(q)));
    });
}

iv_status iv_hurwitz_to_quaternion(const iv_element* x, char** out) {
    return guard([&] {
        need(x, out);
        if (x->x.order()->name() != "hurwitz") throw InvalidArgument("quaternion coordinates need the hurwitz order");
        Json j = Json::array();
        for (const auto& c : hurwitz_to_quaternion(x->x.coords())) j.push_back(rational_to_json(c));
        put(out, j);
    });
}

iv_status iv_triangular_spectrum(const iv_matrix* m, iv_poly** out) {
    return guard([&] {
        need(m, out);
        put(out, triangular_spectrum(m->m).poly());
    });
}

iv_status iv_density_refute(const iv_poly* f, const iv_order* o, const char* candidates_json, char** out) {
    return guard([&] {
        need(f, o, candidates_json, out);
        const auto xs = elements(o, candidates_json);
        const auto w = density_refute(f->p, o->o, xs);
        Json j = {{"witness", nullptr}};
        if (w) {
            j["witness"] = element_to_json(*w);
            j["witness_text"] = element_to_text(*w);
            j["f_witness"] = element_to_json(eval_poly(f->p, *w));
        }
        put(out, j);
    });
}

iv_status iv_spectrum_transfer_check(const iv_poly* f, const char* pairs_json, int* out) {
    return guard([&] {
        need(f, pairs_json, out);
        const Json j = Json::parse(pairs_json);
        if (!j.is_array()) throw InvalidArgument("pairs must be a JSON array of [M, N]");
        std::vector<std::pair<RatMatrix, RatMatrix>> pairs;
        for (const auto& p : j) {
            if (!p.is_array() || p.size() != 2) throw InvalidArgument("each pair must be [M, N]");
            pairs.emplace_back(matrix_from_json(p[0]), matrix_from_json(p[1]));
        }
        *out = spectrum_transfer_check(f->p, pairs);
    });
}

iv_status iv_companion_family(unsigned n, unsigned height, int irreducible_only, char** out) {
    return guard([&] {
        need(out);
        auto fam = companion_family(n, height, irreducible_only != 0);
        Json list = Json::array();
        while (auto c = fam.next()) list.push_back(poly_to_json(c->first));
        put(out, list);
    });
}

iv_status iv_example_report(const char* name, uint64_t seed, uint64_t count, char** out) {
    return guard([&] {
        need(name, out);
        put(out, example_report(name, seed, count));
    });
}

iv_status iv_density_report(const char* check, uint64_t seed, uint64_t count, char** out) {
    return guard([&] {
        need(check, out);
        put(out, density_report(check, seed, count));
    });
}

} // extern "C"
