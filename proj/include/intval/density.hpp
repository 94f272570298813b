#pragma once

#include "intval/matrix.hpp"
#include "intval/order.hpp"
#include "intval/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace intval {

struct ThreeSquares {
    std::uint64_t n = 0;
    // a1 <= a2 <= a3 with a1^2 + a2^2 + a3^2 = n.
    std::optional<std::array<std::uint64_t, 3>> decomposition;
};

// Exhaustive search; the lexicographically first ascending triple.
ThreeSquares three_squares(std::uint64_t n);

// Every ascending triple, in lexicographic order.
std::vector<std::array<std::uint64_t, 3>> all_three_squares(std::uint64_t n);

// n = 4^k (8m + 7).
bool is_legendre_exception(std::uint64_t n);

// For an integral non-scalar quaternion q (element of hurwitz (x) Q),
// an element q' of the Hurwitz order with the same minimal polynomial
// X^2 - 2 q0 X + N. Throws InvalidArgument on non-integral or scalar q, or
// on an element of another order.
AlgebraElement hurwitz_match(const AlgebraElement& q);

// Sufficient irreducibility test for monic p in Z[X]: p is irreducible
// modulo one of 2, 3, 5, 7. Degree-1 polynomials always pass.
bool certified_irreducible(const IntPolynomial& p);

// p monic of degree >= 1, irreducible over F_prime (brute-force trial
// division by all monic polynomials of degree <= deg/2).
bool irreducible_mod(const IntPolynomial& p, unsigned prime);

// Companions of all monic X^n + c_{n-1} X^{n-1} + ... + c_0 with
// c_i in [-height, height], c_0 varying fastest from -height. When
// irreducible_only is set, only polynomials passing certified_irreducible
// are kept; the filter is sound but incomplete.
class CompanionFamily {
public:
    CompanionFamily(unsigned n, unsigned height, bool irreducible_only);

    // The next (polynomial, companion) pair.
    std::optional<std::pair<IntPolynomial, RatMatrix>> next();

private:
    unsigned n_;
    long height_;
    bool irreducible_only_;
    std::vector<long> c_;
    bool done_ = false;
};

CompanionFamily companion_family(unsigned n, unsigned height, bool irreducible_only);

// Distinct diagonal entries as a spectrum; cross-checked against
// spectrum(M). Throws InvalidArgument on a non-triangular matrix.
SpectrumPoly triangular_spectrum(const RatMatrix& m);

// If f is in Int(A) but f(b) is not integral for some candidate b in A',
// returns b: A is then not polynomially dense in A'. Candidates must be
// integral elements of A (x) Q.
std::optional<AlgebraElement> density_refute(const RatPolynomial& f, const OrderPtr& order,
                                             std::span<const AlgebraElement> candidates);

// For each pair (M, N) with equal spectra, f(M) integral iff f(N) integral.
// Throws InvalidArgument on a pair with unequal spectra.
bool spectrum_transfer_check(const RatPolynomial& f, std::span<const std::pair<RatMatrix, RatMatrix>> pairs);

} // namespace intval
