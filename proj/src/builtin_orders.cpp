#include "intval/errors.hpp"
#include "intval/order.hpp"

#include <charconv>
#include <string>

namespace intval {

namespace {

using Table = std::vector<std::vector<std::vector<Integer>>>;

Table zero_table(std::size_t r) {
    return Table(r, std::vector<std::vector<Integer>>(r, std::vector<Integer>(r, Integer(0))));
}

OrderPtr integers() {
    Order::Presentation s;
    s.name = "integers";
    s.labels = {"1"};
    s.structure_constants = {{{Integer(1)}}};
    s.unity = {1};
    return Order::make(std::move(s));
}

// Z[s], s^2 = m.
OrderPtr quadratic(long m) {
    Order::Presentation s;
    s.name = "quadratic(" + std::to_string(m) + ")";
    s.labels = {"1", "s"};
    Table t = zero_table(2);
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    t[1][1][0] = m;
    s.structure_constants = std::move(t);
    s.unity = {1, 0};
    return Order::make(std::move(s));
}

// Z[t], t = (1 + sqrt(m)) / 2, t^2 = t + (m - 1) / 4.
OrderPtr quadratic_half(long m) {
    if (((m % 4) + 4) % 4 != 1) {
        throw InvalidArgument("quadratic_half(m) needs m = 1 mod 4, got " + std::to_string(m));
    }
    Order::Presentation s;
    s.name = "quadratic_half(" + std::to_string(m) + ")";
    s.labels = {"1", "t"};
    Table t = zero_table(2);
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    t[1][1][0] = (m - 1) / 4;
    t[1][1][1] = 1;
    s.structure_constants = std::move(t);
    s.unity = {1, 0};
    return Order::make(std::move(s));
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

// Structure constants of a Z-lattice in the rational quaternions spanned by
// the given basis; every product must land back in the lattice.
Table quaternion_table(const std::vector<Quaternion>& basis,
                       std::vector<Rational> (*coords_of)(const Quaternion&)) {
    Table t = zero_table(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const auto c = coords_of(quat_mul(basis[i], basis[j]));
            for (std::size_t k = 0; k < 4; ++k) {
                if (!is_integer(c[k])) throw std::logic_error("quaternion basis is not closed under multiplication");
                t[i][j][k] = c[k].get_num();
            }
        }
    }
    return t;
}

std::vector<Rational> standard_coords(const Quaternion& q) { return {q[0], q[1], q[2], q[3]}; }

OrderPtr lipschitz() {
    Order::Presentation s;
    s.name = "lipschitz";
    s.labels = {"1", "i", "j", "k"};
    std::vector<Quaternion> basis(4, Quaternion{0, 0, 0, 0});
    for (std::size_t i = 0; i < 4; ++i) basis[i][i] = 1;
    s.structure_constants = quaternion_table(basis, &standard_coords);
    s.unity = {1, 0, 0, 0};
    return Order::make(std::move(s));
}

// Re-based on {1, i, j, w}, w = (1+i+j+k)/2, so the half-integer
// quaternions get integer coordinates.
OrderPtr hurwitz() {
    Order::Presentation s;
    s.name = "hurwitz";
    s.labels = {"1", "i", "j", "w"};
    const Rational h(1, 2);
    std::vector<Quaternion> basis = {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
                                     Quaternion{h, h, h, h}};
    s.structure_constants = quaternion_table(basis, &quaternion_to_hurwitz);
    s.unity = {1, 0, 0, 0};
    return Order::make(std::move(s));
}

std::string unit_label(std::size_t a, std::size_t b) { return "E" + std::to_string(a + 1) + std::to_string(b + 1); }

// Basis E_ab (row-major, restricted to a <= b when upper_only), E_ab E_cd = [b == c] E_ad.
OrderPtr matrix_units(std::size_t k, bool upper_only) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (!upper_only || a <= b) units.emplace_back(a, b);
        }
    }
    const std::size_t r = units.size();
    auto index_of = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < r; ++i) {
            if (units[i].first == a && units[i].second == b) return i;
        }
        throw std::logic_error("missing matrix unit");
    };
    Order::Presentation s;
    s.name = (upper_only ? "triangular(" : "matrix(") + std::to_string(k) + ")";
    Table t = zero_table(r);
    NaturalRep rep;
    rep.dim = k;
    s.unity.assign(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        const auto [a, b] = units[i];
        s.labels.push_back(unit_label(a, b));
        RatMatrix img(k);
        img(a, b) = 1;
        rep.images.push_back(std::move(img));
        if (a == b) s.unity[i] = 1;
        for (std::size_t j = 0; j < r; ++j) {
            const auto [c, d] = units[j];
            if (b == c) t[i][j][index_of(a, d)] = 1;
        }
    }
    s.structure_constants = std::move(t);
    s.spectral_degree = k;
    s.natural_rep = std::move(rep);
    return Order::make(std::move(s));
}

long parse_arg(std::string_view name, std::string_view prefix) {
    std::string_view body = name.substr(prefix.size());
    if (body.size() < 2 || body.back() != ')') throw InvalidArgument("malformed order name '" + std::string(name) + "'");
    body = body.substr(0, body.size() - 1);
    long v = 0;
    const auto* first = body.data();
    const auto* last = body.data() + body.size();
    if (!body.empty() && body.front() == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw InvalidArgument("malformed integer argument in order name '" + std::string(name) + "'");
    }
    return v;
}

constexpr long kMaxMatrixSize = 4;

std::size_t matrix_size(std::string_view name, std::string_view prefix) {
    const long k = parse_arg(name, prefix);
    if (k < 1 || k > kMaxMatrixSize) {
        throw InvalidArgument("matrix size must be in [1, " + std::to_string(kMaxMatrixSize) + "], got " +
                              std::to_string(k));
    }
    return static_cast<std::size_t>(k);
}

} // namespace

OrderPtr builtin(std::string_view name) {
    if (name == "integers") return integers();
    if (name == "lipschitz") return lipschitz();
    if (name == "hurwitz") return hurwitz();
    if (name.starts_with("quadratic_half(")) return quadratic_half(parse_arg(name, "quadratic_half("));
    if (name.starts_with("quadratic(")) return quadratic(parse_arg(name, "quadratic("));
    if (name.starts_with("matrix(")) return matrix_units(matrix_size(name, "matrix("), false);
    if (name.starts_with("triangular(")) return matrix_units(matrix_size(name, "triangular("), true);
    throw InvalidArgument("unknown order '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"integers", "quadratic(m)", "quadratic_half(m)", "lipschitz", "hurwitz", "matrix(k)", "triangular(k)"};
}

} // namespace intval
