#include "intval/matrix.hpp"

#include "intval/errors.hpp"

#include <optional>
#include <string>
#include <utility>

namespace intval {

RatMatrix::RatMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {
    if (n == 0) throw InvalidArgument("matrix dimension must be >= 1");
}

RatMatrix::RatMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
    if (n == 0) throw InvalidArgument("matrix dimension must be >= 1");
    if (a_.size() != n * n) {
        throw InvalidArgument("expected " + std::to_string(n * n) + " entries, got " + std::to_string(a_.size()));
    }
}

RatMatrix::RatMatrix(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
    if (n_ == 0) throw InvalidArgument("matrix dimension must be >= 1");
    a_.reserve(n_ * n_);
    for (std::size_t r = 0; r < n_; ++r) {
        if (rows[r].size() != n_) {
            throw InvalidArgument("matrix is not square: row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " + std::to_string(n_));
        }
        a_.insert(a_.end(), rows[r].begin(), rows[r].end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& a) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& diag) {
    RatMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Rational RatMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_) {
        if (x != 0) return false;
    }
    return true;
}

bool RatMatrix::has_integer_entries() const {
    for (const auto& x : a_) {
        if (!is_integer(x)) return false;
    }
    return true;
}

bool RatMatrix::is_upper_triangular() const {
    for (std::size_t r = 1; r < n_; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
            if ((*this)(r, c) != 0) return false;
        }
    }
    return true;
}

namespace {

void require_same_dim(const RatMatrix& a, const RatMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Mismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

} // namespace

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    RatMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.dim();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw InvalidArgument("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational s = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational t = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= t * a(col, j);
                inv(r, j) -= t * inv(col, j);
            }
        }
    }
    return inv;
}

RatPolynomial minimal_polynomial(const RatMatrix& m) {
    // Each reduced row keeps the combination of powers it equals, so the
    // first power that reduces to zero yields the annihilating relation.
    struct Row {
        std::vector<Rational> v;
        std::size_t pivot;
        std::vector<Rational> comb;
    };
    const std::size_t n = m.dim();
    std::vector<Row> basis;
    RatMatrix power = RatMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> w = power.entries();
        std::vector<Rational> comb(n + 1, Rational(0));
        comb[k] = 1;
        for (const Row& row : basis) {
            if (w[row.pivot] == 0) continue;
            const Rational t = w[row.pivot] / row.v[row.pivot];
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (row.v[i] != 0) w[i] -= t * row.v[i];
            }
            for (std::size_t i = 0; i <= k; ++i) comb[i] -= t * row.comb[i];
        }
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (!pivot) {
            comb.resize(k + 1);
            return RatPolynomial(std::move(comb));
        }
        basis.push_back({std::move(w), *pivot, std::move(comb)});
        power = power * m;
    }
    throw std::logic_error("no linear dependence among the first n+1 powers (Cayley-Hamilton violated)");
}

RatPolynomial characteristic_polynomial(const RatMatrix& m) {
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    const std::size_t n = m.dim();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + RatMatrix::scalar(n, c[n - k + 1]);
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return RatPolynomial(std::move(c));
}

RatMatrix eval_poly_matrix(const RatPolynomial& f, const RatMatrix& m) {
    const std::size_t n = m.dim();
    RatMatrix acc(n);
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

bool is_integral_matrix(const RatMatrix& m) { return has_integer_coeffs(minimal_polynomial(m)); }

RatMatrix companion(const RatPolynomial& p) {
    if (p.degree() < 1) throw InvalidArgument("companion matrix needs degree >= 1, got " + to_text(p));
    if (!p.is_monic()) throw InvalidArgument("companion matrix needs a monic polynomial, got " + to_text(p));
    const auto n = static_cast<std::size_t>(p.degree());
    RatMatrix c(n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
    return c;
}

SpectrumPoly::SpectrumPoly(RatPolynomial p) : p_(std::move(p)) {
    if (!p_.is_monic()) throw InvalidArgument("spectrum polynomial must be monic, got " + to_text(p_));
    if (poly_gcd(p_, p_.derivative()).degree() != 0) {
        throw InvalidArgument("spectrum polynomial must be squarefree, got " + to_text(p_));
    }
}

SpectrumPoly spectrum(const RatMatrix& m) { return SpectrumPoly::of(minimal_polynomial(m)); }

SpectrumPoly image_spectrum(const SpectrumPoly& s, const RatPolynomial& f) {
    if (s.poly().degree() < 1) throw InvalidArgument("image_spectrum of an empty root set");
    return SpectrumPoly::of(characteristic_polynomial(eval_poly_matrix(f, companion(s.poly()))));
}

} // namespace intval
