#pragma once

#include "intval/matrix.hpp"
#include "intval/order.hpp"
#include "intval/polynomial.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace intval {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);

// Integer coordinates in [-bound, bound].
AlgebraElement random_element(const OrderPtr& order, Rng& rng, long bound);

// Degree in [0, max_degree], numerators in [-num_bound, num_bound],
// denominators in [1, den_max].
RatPolynomial random_rat_poly(Rng& rng, int max_degree, long num_bound, long den_max);

// Monic of the given degree, lower coefficients in [-bound, bound].
IntPolynomial random_monic(Rng& rng, int degree, long bound);

RatMatrix random_int_matrix(Rng& rng, std::size_t n, long bound);
RatMatrix random_rat_matrix(Rng& rng, std::size_t n, long num_bound, long den_max);
RatMatrix random_upper_triangular(Rng& rng, std::size_t n, long bound);

// (U, U^-1), both integer, U a product of elementary row operations.
std::pair<RatMatrix, RatMatrix> random_unimodular(Rng& rng, std::size_t n, int steps, long bound);

// Integral non-scalar element of hurwitz (x) Q with Hurwitz-basis
// coordinates n/d, d in {1, 2}, |n| <= num_bound (rejection sampling).
AlgebraElement random_integral_quaternion(const OrderPtr& hurwitz, Rng& rng, long num_bound);

} // namespace intval
