#include "intval/sampling.hpp"

#include "intval/errors.hpp"

namespace intval {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

AlgebraElement random_element(const OrderPtr& order, Rng& rng, long bound) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < order->rank(); ++i) c.emplace_back(uniform_int(rng, -bound, bound));
    return AlgebraElement(order, std::move(c));
}

RatPolynomial random_rat_poly(Rng& rng, int max_degree, long num_bound, long den_max) {
    const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, max_degree));
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= deg; ++i) {
        Rational q(Integer(uniform_int(rng, -num_bound, num_bound)), Integer(uniform_int(rng, 1, den_max)));
        q.canonicalize();
        c.push_back(q);
    }
    return RatPolynomial(std::move(c));
}

IntPolynomial random_monic(Rng& rng, int degree, long bound) {
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform_int(rng, -bound, bound));
    c.emplace_back(1);
    return IntPolynomial(std::move(c));
}

RatMatrix random_int_matrix(Rng& rng, std::size_t n, long bound) {
    RatMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform_int(rng, -bound, bound);
    }
    return m;
}

RatMatrix random_rat_matrix(Rng& rng, std::size_t n, long num_bound, long den_max) {
    RatMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Rational q(Integer(uniform_int(rng, -num_bound, num_bound)), Integer(uniform_int(rng, 1, den_max)));
            q.canonicalize();
            m(r, c) = q;
        }
    }
    return m;
}

RatMatrix random_upper_triangular(Rng& rng, std::size_t n, long bound) {
    RatMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) m(r, c) = uniform_int(rng, -bound, bound);
    }
    return m;
}

std::pair<RatMatrix, RatMatrix> random_unimodular(Rng& rng, std::size_t n, int steps, long bound) {
    RatMatrix u = RatMatrix::identity(n);
    RatMatrix inv = RatMatrix::identity(n);
    if (n < 2) return {u, inv};
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const long t = uniform_int(rng, -bound, bound);
        // E = I + t e_ij, E^-1 = I - t e_ij.
        RatMatrix e = RatMatrix::identity(n);
        RatMatrix einv = RatMatrix::identity(n);
        e(i, j) = t;
        einv(i, j) = -t;
        u = e * u;
        inv = inv * einv;
    }
    return {u, inv};
}

AlgebraElement random_integral_quaternion(const OrderPtr& hurwitz, Rng& rng, long num_bound) {
    if (hurwitz->name() != "hurwitz") throw InvalidArgument("random_integral_quaternion needs the hurwitz order");
    while (true) {
        std::vector<Rational> c;
        for (int i = 0; i < 4; ++i) {
            Rational q(Integer(uniform_int(rng, -num_bound, num_bound)), Integer(uniform_int(rng, 1, 2)));
            q.canonicalize();
            c.push_back(q);
        }
        const Quaternion x = hurwitz_to_quaternion(c);
        if (x[1] == 0 && x[2] == 0 && x[3] == 0) continue;
        const Rational norm = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        if (is_integer(2 * x[0]) && is_integer(norm)) return AlgebraElement(hurwitz, std::move(c));
    }
}

} // namespace intval
