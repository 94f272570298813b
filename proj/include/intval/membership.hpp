#pragma once

#include "intval/order.hpp"
#include "intval/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace intval {

enum class Verdict { Yes, No, UnknownBounded };

std::string to_string(Verdict v);

struct MembershipVerdict {
    Verdict verdict = Verdict::UnknownBounded;
    // Present on No: an element whose image is out of the target set.
    std::optional<AlgebraElement> counterexample;
    std::optional<IntPolynomial> certificate;
    std::uint64_t checked_count = 0;
};

// Residue classes member_int is willing to enumerate in total.
inline constexpr std::uint64_t kDefaultResidueLimit = 50'000'000;

// Decides f in Int(A) = {f : f(A) in A}. Writing f = g/d with d minimal,
// f(A) in A iff g(a) in p^e A for every prime power p^e || d and every
// residue a of A / p^e A. Throws LimitExceeded beyond residue_limit classes.
MembershipVerdict member_int(const RatPolynomial& f, const OrderPtr& order,
                             std::uint64_t residue_limit = kDefaultResidueLimit);

// f(a) integral for every listed a, decided through the image of the
// spectrum of a. The answer covers only the listed elements; pass
// whole_algebra_query when the caller really asked about all of A, in which
// case a clean pass is reported as UnknownBounded.
MembershipVerdict member_intval_on(const RatPolynomial& f, std::span<const AlgebraElement> elements,
                                   bool whole_algebra_query = false);

// f in Z[X] + mu * Q[X] for monic mu in Z[X]: the remainder of f mod mu has
// integer coefficients.
bool pullback_member(const RatPolynomial& f, const IntPolynomial& mu);

// Outcome of a per-element check over a finite sample.
struct SampleCheck {
    bool holds = true;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<AlgebraElement> failure;

    explicit operator bool() const { return holds; }
};

// d^(n-1) h(f(X)) lies in the pullback of mu_a for every sampled a in A,
// where f = g/d and n is the order's spectral degree. Throws
// PreconditionFailed if f is not integral-valued on the sample or a sample
// element lies outside A.
SampleCheck scaling_lemma_check(const RatPolynomial& f, const IntPolynomial& h, const OrderPtr& order,
                                std::span<const AlgebraElement> sample);

// Total degree certificate_phi is willing to build.
inline constexpr std::uint64_t kDefaultCertificateDegreeLimit = 200'000;

// Product of every monic polynomial of degree 1..n whose lower
// coefficients lie in [0, m), m = (d^(n-1))^2. Every monic integer
// polynomial of degree <= n is congruent mod m to one of the factors.
IntPolynomial certificate_phi(const RatPolynomial& f, const OrderPtr& order,
                              std::uint64_t degree_limit = kDefaultCertificateDegreeLimit);

// phi(f(X)) in the pullback of mu_a for each sampled a with mu_a in Z[X];
// elements with non-integral mu_a are skipped.
SampleCheck verify_certificate(const IntPolynomial& phi, const RatPolynomial& f, const OrderPtr& order,
                               std::span<const AlgebraElement> sample);

struct ChainReport {
    bool pullback_on_sample = true;
    MembershipVerdict int_verdict;
    MembershipVerdict intval_verdict;
    std::size_t sample_size = 0;
    // Per-element implication failures. Nonempty means a bug.
    std::vector<std::string> violations;
};

// Evaluates the three rings of the pullback chain on a sample from A and
// checks the implications pullback(a) => f(a) in A => f(a) integral for each
// sampled a, and member_int yes => f(a) in A on the whole sample.
ChainReport chain_check(const RatPolynomial& f, const OrderPtr& order, std::span<const AlgebraElement> sample);

// Prime factorization by trial division.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

} // namespace intval
