#include "intval/density.hpp"

#include "intval/errors.hpp"
#include "intval/membership.hpp"

#include <cmath>
#include <string>

namespace intval {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<std::array<std::uint64_t, 3>> all_three_squares(std::uint64_t n) {
    std::vector<std::array<std::uint64_t, 3>> out;
    for (std::uint64_t a = 0; 3 * a * a <= n; ++a) {
        for (std::uint64_t b = a; a * a + 2 * b * b <= n; ++b) {
            const std::uint64_t rest = n - a * a - b * b;
            const std::uint64_t c = isqrt(rest);
            if (c * c == rest && c >= b) out.push_back({a, b, c});
        }
    }
    return out;
}

ThreeSquares three_squares(std::uint64_t n) {
    ThreeSquares out{n, std::nullopt};
    for (std::uint64_t a = 0; 3 * a * a <= n; ++a) {
        for (std::uint64_t b = a; a * a + 2 * b * b <= n; ++b) {
            const std::uint64_t rest = n - a * a - b * b;
            const std::uint64_t c = isqrt(rest);
            if (c * c == rest && c >= b) {
                out.decomposition = std::array<std::uint64_t, 3>{a, b, c};
                return out;
            }
        }
    }
    return out;
}

bool is_legendre_exception(std::uint64_t n) {
    if (n == 0) return false;
    while (n % 4 == 0) n /= 4;
    return n % 8 == 7;
}

AlgebraElement hurwitz_match(const AlgebraElement& q) {
    if (q.order()->name() != "hurwitz") {
        throw InvalidArgument("hurwitz_match needs an element of the hurwitz order, got '" + q.order()->name() + "'");
    }
    const Quaternion x = hurwitz_to_quaternion(q.coords());
    if (x[1] == 0 && x[2] == 0 && x[3] == 0) throw InvalidArgument("hurwitz_match needs a non-scalar quaternion");
    if (!is_integral_element(q)) throw InvalidArgument("hurwitz_match needs an integral quaternion");

    // mu_q = X^2 - 2 q0 X + N.
    const Rational norm = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    const Rational t = 2 * x[0];
    const auto need_u64 = [](const Rational& v) {
        if (!is_integer(v) || v < 0 || !v.get_num().fits_ulong_p()) {
            throw InvalidArgument("hurwitz_match: value out of range: " + to_string(v));
        }
        return static_cast<std::uint64_t>(v.get_num().get_ui());
    };

    Quaternion out;
    if (is_integer(x[0])) {
        const std::uint64_t u = need_u64(norm - x[0] * x[0]);
        const auto sq = three_squares(u);
        if (!sq.decomposition) throw std::logic_error("no three-square decomposition of " + std::to_string(u));
        const auto& a = *sq.decomposition;
        // Largest part on i: (3/5)i + (4/5)j maps to i.
        out = {x[0], Rational(a[2]), Rational(a[1]), Rational(a[0])};
    } else {
        // q0 = t/2 with t odd; (2q1)^2 + (2q2)^2 + (2q3)^2 = 4N - t^2 = 3 mod 4,
        // which forces all three parts odd.
        const std::uint64_t u = need_u64(4 * norm - t * t);
        std::optional<std::array<std::uint64_t, 3>> pick;
        for (const auto& a : all_three_squares(u)) {
            if (a[0] % 2 == 1 && a[1] % 2 == 1 && a[2] % 2 == 1) {
                pick = a;
                break;
            }
        }
        if (!pick) throw std::logic_error("no all-odd three-square decomposition of " + std::to_string(u));
        const auto& a = *pick;
        out = {t / 2, Rational(a[2]) / 2, Rational(a[1]) / 2, Rational(a[0]) / 2};
    }
    return AlgebraElement(q.order(), quaternion_to_hurwitz(out));
}

namespace {

std::vector<long> reduce_mod(const IntPolynomial& p, unsigned prime) {
    std::vector<long> c;
    for (const auto& z : p.coeffs()) c.push_back(static_cast<long>(mod_floor(z, prime).get_si()));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Remainder of a by monic b over F_prime.
std::vector<long> rem_mod(std::vector<long> a, const std::vector<long>& b, unsigned prime) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const long t = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = ((a[shift + i] - t * b[i]) % static_cast<long>(prime) + prime) % prime;
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

bool irreducible_mod(const IntPolynomial& p, unsigned prime) {
    if (!p.is_monic() || p.degree() < 1) throw InvalidArgument("irreducible_mod needs a monic polynomial of degree >= 1");
    const auto a = reduce_mod(p, prime);
    const auto n = static_cast<std::size_t>(p.degree());
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::vector<long> b(k + 1, 0);
        b[k] = 1;
        while (true) {
            if (rem_mod(a, b, prime).empty()) return false;
            std::size_t i = 0;
            while (i < k) {
                if (++b[i] < static_cast<long>(prime)) break;
                b[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return true;
}

bool certified_irreducible(const IntPolynomial& p) {
    if (p.degree() == 1) return true;
    for (unsigned prime : {2u, 3u, 5u, 7u}) {
        if (irreducible_mod(p, prime)) return true;
    }
    return false;
}

CompanionFamily::CompanionFamily(unsigned n, unsigned height, bool irreducible_only)
    : n_(n), height_(static_cast<long>(height)), irreducible_only_(irreducible_only), c_(n, -static_cast<long>(height)) {
    if (n == 0) throw InvalidArgument("companion family degree must be >= 1");
}

std::optional<std::pair<IntPolynomial, RatMatrix>> CompanionFamily::next() {
    while (!done_) {
        std::vector<Integer> coeffs(c_.begin(), c_.end());
        coeffs.emplace_back(1);
        IntPolynomial p(std::move(coeffs));
        std::size_t i = 0;
        while (i < n_) {
            if (++c_[i] <= height_) break;
            c_[i] = -height_;
            ++i;
        }
        if (i == n_) done_ = true;
        if (irreducible_only_ && !certified_irreducible(p)) continue;
        RatMatrix m = companion(to_rational(p));
        return std::make_pair(std::move(p), std::move(m));
    }
    return std::nullopt;
}

CompanionFamily companion_family(unsigned n, unsigned height, bool irreducible_only) {
    return CompanionFamily(n, height, irreducible_only);
}

SpectrumPoly triangular_spectrum(const RatMatrix& m) {
    if (!m.is_upper_triangular()) throw InvalidArgument("triangular_spectrum needs an upper-triangular matrix");
    std::vector<Rational> distinct;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        bool seen = false;
        for (const auto& d : distinct) seen = seen || d == m(i, i);
        if (!seen) distinct.push_back(m(i, i));
    }
    RatPolynomial p = RatPolynomial::constant(Rational(1));
    for (const auto& d : distinct) p = p * RatPolynomial{Rational(-d), Rational(1)};
    SpectrumPoly s(std::move(p));
    if (!(s == spectrum(m))) throw std::logic_error("diagonal spectrum disagrees with the minimal polynomial");
    return s;
}

std::optional<AlgebraElement> density_refute(const RatPolynomial& f, const OrderPtr& order,
                                             std::span<const AlgebraElement> candidates) {
    for (const auto& b : candidates) {
        if (b.order() != order) throw Mismatch("candidate from order '" + b.order()->name() + "'");
        if (!is_integral_element(b)) throw InvalidArgument("density_refute candidates must be integral");
    }
    if (member_int(f, order).verdict != Verdict::Yes) return std::nullopt;
    for (const auto& b : candidates) {
        if (!is_integral_element(eval_poly(f, b))) return b;
    }
    return std::nullopt;
}

bool spectrum_transfer_check(const RatPolynomial& f, std::span<const std::pair<RatMatrix, RatMatrix>> pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(spectrum(pairs[i].first) == spectrum(pairs[i].second))) {
            throw InvalidArgument("pair " + std::to_string(i) + " has unequal spectra");
        }
    }
    for (const auto& [m, n] : pairs) {
        if (is_integral_matrix(eval_poly_matrix(f, m)) != is_integral_matrix(eval_poly_matrix(f, n))) return false;
    }
    return true;
}

} // namespace intval
