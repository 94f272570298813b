#ifndef INTVAL_INTVAL_H
#define INTVAL_INTVAL_H

#include <stdint.h>

#if defined(_WIN32)
#define IV_API __declspec(dllexport)
#else
#define IV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iv_status {
    IV_OK = 0,
    IV_ERR_INVALID_ARGUMENT = 1,
    IV_ERR_PARSE = 2,
    IV_ERR_MISMATCH = 3,
    IV_ERR_PRECONDITION = 4,
    IV_ERR_LIMIT = 5,
    IV_ERR_INTERNAL = 6
} iv_status;

typedef struct iv_poly iv_poly;
typedef struct iv_matrix iv_matrix;
typedef struct iv_order iv_order;
typedef struct iv_element iv_element;

/* Message for the last failed call on this thread; "" after success. */
IV_API const char* iv_last_error(void);
IV_API const char* iv_status_name(iv_status s);
IV_API const char* iv_version(void);

/* Every char** result is heap-allocated and released with iv_string_free. */
IV_API void iv_string_free(char* s);

/* Polynomials: JSON arrays of rational strings, ascending degree. */
IV_API iv_status iv_poly_from_json(const char* json, iv_poly** out);
IV_API iv_status iv_poly_to_json(const iv_poly* p, char** out);
IV_API iv_status iv_poly_to_text(const iv_poly* p, char** out);
IV_API iv_status iv_poly_clone(const iv_poly* p, iv_poly** out);
IV_API iv_status iv_poly_degree(const iv_poly* p, int* out);
IV_API iv_status iv_poly_equal(const iv_poly* a, const iv_poly* b, int* out);
IV_API void iv_poly_free(iv_poly* p);

IV_API iv_status iv_poly_divmod(const iv_poly* f, const iv_poly* g, iv_poly** quotient, iv_poly** remainder);
IV_API iv_status iv_poly_gcd(const iv_poly* f, const iv_poly* g, iv_poly** out);
IV_API iv_status iv_poly_squarefree(const iv_poly* f, iv_poly** out);
/* f = g / d; d is written as a decimal string. */
IV_API iv_status iv_poly_normalize(const iv_poly* f, iv_poly** g, char** d);
IV_API iv_status iv_poly_binomial(unsigned k, iv_poly** out);

/* Matrices: JSON arrays of rows of rational strings. */
IV_API iv_status iv_matrix_from_json(const char* json, iv_matrix** out);
IV_API iv_status iv_matrix_to_json(const iv_matrix* m, char** out);
IV_API iv_status iv_matrix_dim(const iv_matrix* m, int* out);
IV_API void iv_matrix_free(iv_matrix* m);

IV_API iv_status iv_matrix_minpoly(const iv_matrix* m, iv_poly** out);
IV_API iv_status iv_matrix_charpoly(const iv_matrix* m, iv_poly** out);
IV_API iv_status iv_matrix_eval(const iv_poly* f, const iv_matrix* m, iv_matrix** out);
IV_API iv_status iv_matrix_is_integral(const iv_matrix* m, int* out);
IV_API iv_status iv_matrix_spectrum(const iv_matrix* m, iv_poly** out);
IV_API iv_status iv_image_spectrum(const iv_poly* s, const iv_poly* f, iv_poly** out);
IV_API iv_status iv_companion(const iv_poly* p, iv_matrix** out);

/* Orders. */
IV_API iv_status iv_order_builtin(const char* name, iv_order** out);
IV_API iv_status iv_order_from_json(const char* json, iv_order** out);
IV_API iv_status iv_order_to_json(const iv_order* o, char** out);
IV_API iv_status iv_order_rank(const iv_order* o, int* out);
IV_API iv_status iv_order_spectral_degree(const iv_order* o, int* out);
/* Newline-separated list of built-in name patterns. */
IV_API iv_status iv_order_builtin_names(char** out);
IV_API void iv_order_free(iv_order* o);

/* Elements: JSON coordinate arrays in the order's basis. Element lists are
   JSON arrays of such arrays. */
IV_API iv_status iv_element_from_json(const iv_order* o, const char* json, iv_element** out);
IV_API iv_status iv_element_to_json(const iv_element* x, char** out);
IV_API iv_status iv_element_to_text(const iv_element* x, char** out);
IV_API iv_status iv_element_equal(const iv_element* a, const iv_element* b, int* out);
IV_API void iv_element_free(iv_element* x);

IV_API iv_status iv_element_mul(const iv_element* x, const iv_element* y, iv_element** out);
IV_API iv_status iv_element_eval(const iv_poly* f, const iv_element* x, iv_element** out);
IV_API iv_status iv_element_minpoly(const iv_element* x, iv_poly** out);
IV_API iv_status iv_element_is_integral(const iv_element* x, int* out);
IV_API iv_status iv_element_in_order(const iv_element* x, int* out);
IV_API iv_status iv_element_regular_rep(const iv_element* x, iv_matrix** out);

/* modulus is a decimal string; the result is a JSON element list. */
IV_API iv_status iv_residues(const iv_order* o, const char* modulus, char** out);
/* count elements with integer coordinates in [-bound, bound]. */
IV_API iv_status iv_random_elements(const iv_order* o, uint64_t seed, uint64_t count, long bound, char** out);
/* Integral non-scalar Hurwitz-order quaternions, as a JSON element list. */
IV_API iv_status iv_random_integral_quaternions(const iv_order* hurwitz, uint64_t seed, uint64_t count,
                                               long bound, char** out);

/* Membership. Verdicts are JSON {verdict, witness?, certificate?, checked_count}. */
IV_API iv_status iv_member_int(const iv_poly* f, const iv_order* o, char** out);
IV_API iv_status iv_member_intval_on(const iv_poly* f, const iv_order* o, const char* elements_json,
                                     int whole_algebra_query, char** out);
/* mu must be monic with integer coefficients. */
IV_API iv_status iv_pullback_member(const iv_poly* f, const iv_poly* mu, int* out);
IV_API iv_status iv_scaling_lemma_check(const iv_poly* f, const iv_poly* h, const iv_order* o,
                                        const char* elements_json, char** out);
IV_API iv_status iv_certificate_phi(const iv_poly* f, const iv_order* o, iv_poly** out);
IV_API iv_status iv_verify_certificate(const iv_poly* phi, const iv_poly* f, const iv_order* o,
                                       const char* elements_json, char** out);
IV_API iv_status iv_chain_check(const iv_poly* f, const iv_order* o, const char* elements_json, char** out);

/* Density. */
IV_API iv_status iv_three_squares(uint64_t n, char** out);
IV_API iv_status iv_hurwitz_match(const iv_element* q, iv_element** out);
/* Standard coordinates [q0, q1, q2, q3] of q0 + q1 i + q2 j + q3 k against
   elements of the hurwitz order (basis 1, i, j, (1+i+j+k)/2). */
IV_API iv_status iv_hurwitz_from_quaternion(const iv_order* hurwitz, const char* json, iv_element** out);
IV_API iv_status iv_hurwitz_to_quaternion(const iv_element* x, char** out);
IV_API iv_status iv_triangular_spectrum(const iv_matrix* m, iv_poly** out);
/* JSON {witness: element or null}. */
IV_API iv_status iv_density_refute(const iv_poly* f, const iv_order* o, const char* candidates_json, char** out);
/* pairs_json: [[M, N], ...] with matrices as above. */
IV_API iv_status iv_spectrum_transfer_check(const iv_poly* f, const char* pairs_json, int* out);
/* JSON array of polynomials. */
IV_API iv_status iv_companion_family(unsigned n, unsigned height, int irreducible_only, char** out);

/* End-to-end drivers returning JSON reports. */
IV_API iv_status iv_example_report(const char* name, uint64_t seed, uint64_t count, char** out);
IV_API iv_status iv_density_report(const char* check, uint64_t seed, uint64_t count, char** out);

#ifdef __cplusplus
}
#endif

#endif
