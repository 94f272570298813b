#pragma once

#include "intval/polynomial.hpp"
#include "intval/rational.hpp"

#include <cstddef>
#include <vector>

namespace intval {

// Dense square matrix over Q, row-major.
class RatMatrix {
public:
    explicit RatMatrix(std::size_t n);
    RatMatrix(std::size_t n, std::vector<Rational> entries);
    explicit RatMatrix(const std::vector<std::vector<Rational>>& rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix scalar(std::size_t n, const Rational& a);
    static RatMatrix diagonal(const std::vector<Rational>& diag);

    std::size_t dim() const { return n_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    const std::vector<Rational>& entries() const { return a_; }

    Rational trace() const;
    bool is_zero() const;
    bool has_integer_entries() const;
    bool is_upper_triangular() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

// Gauss-Jordan inverse; throws InvalidArgument when singular.
RatMatrix inverse(const RatMatrix& m);

// Monic generator of the null ideal {f : f(M) = 0}, from the first linear
// dependence among I, M, M^2, ... found by exact elimination.
RatPolynomial minimal_polynomial(const RatMatrix& m);

// det(X*I - M), Faddeev-LeVerrier recurrence.
RatPolynomial characteristic_polynomial(const RatMatrix& m);

RatMatrix eval_poly_matrix(const RatPolynomial& f, const RatMatrix& m);

// True iff M solves a monic polynomial in Z[X], decided by mu_M in Z[X].
bool is_integral_matrix(const RatMatrix& m);

// Companion matrix: ones on the subdiagonal, last column -p_0 .. -p_{n-1}.
RatMatrix companion(const RatPolynomial& p);

// Finite subset of the algebraic closure of Q, represented as the root set
// of a monic squarefree polynomial.
class SpectrumPoly {
public:
    // Validates monic and gcd(p, p') = 1.
    explicit SpectrumPoly(RatPolynomial p);
    static SpectrumPoly of(const RatPolynomial& any_nonzero) { return SpectrumPoly(squarefree_part(any_nonzero)); }

    const RatPolynomial& poly() const { return p_; }
    std::size_t size() const { return static_cast<std::size_t>(p_.degree()); }
    // Every root is an algebraic integer (subset of the integral elements).
    bool is_integral() const { return has_integer_coeffs(p_); }

    friend bool operator==(const SpectrumPoly& a, const SpectrumPoly& b) { return a.p_ == b.p_; }

private:
    RatPolynomial p_;
};

SpectrumPoly spectrum(const RatMatrix& m);

// { f(alpha) : s(alpha) = 0 } via the characteristic polynomial of
// f(companion(s)).
SpectrumPoly image_spectrum(const SpectrumPoly& s, const RatPolynomial& f);

} // namespace intval
