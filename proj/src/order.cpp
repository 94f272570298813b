#include "intval/order.hpp"

#include "intval/errors.hpp"

#include <string>
#include <utility>

namespace intval {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t l) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(l) + ")";
}

// Coordinates of e_i * e_j.
std::vector<Integer> basis_product(const Order& o, std::size_t i, std::size_t j) {
    std::vector<Integer> v(o.rank());
    for (std::size_t k = 0; k < o.rank(); ++k) v[k] = o.constant(i, j, k);
    return v;
}

// Coordinates of v * e_l for an integer vector v.
std::vector<Integer> right_mul_basis(const Order& o, const std::vector<Integer>& v, std::size_t l) {
    std::vector<Integer> r(o.rank(), Integer(0));
    for (std::size_t k = 0; k < o.rank(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t m = 0; m < o.rank(); ++m) r[m] += v[k] * o.constant(k, l, m);
    }
    return r;
}

// Coordinates of e_i * v.
std::vector<Integer> left_mul_basis(const Order& o, std::size_t i, const std::vector<Integer>& v) {
    std::vector<Integer> r(o.rank(), Integer(0));
    for (std::size_t k = 0; k < o.rank(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t m = 0; m < o.rank(); ++m) r[m] += v[k] * o.constant(i, k, m);
    }
    return r;
}

} // namespace

OrderPtr Order::make(Presentation p) {
    const std::size_t r = p.structure_constants.size();
    if (r == 0) throw InvalidArgument("order rank must be >= 1");
    if (p.labels.empty()) {
        for (std::size_t i = 0; i < r; ++i) p.labels.push_back("e" + std::to_string(i));
    }
    if (p.labels.size() != r) {
        throw InvalidArgument("expected " + std::to_string(r) + " basis labels, got " + std::to_string(p.labels.size()));
    }
    if (p.unity.size() != r) {
        throw InvalidArgument("expected " + std::to_string(r) + " unity coordinates, got " + std::to_string(p.unity.size()));
    }

    std::shared_ptr<Order> o(new Order());
    o->name_ = p.name.empty() ? "custom" : std::move(p.name);
    o->rank_ = r;
    o->labels_ = std::move(p.labels);
    o->unity_ = std::move(p.unity);
    o->c_.reserve(r * r * r);
    for (std::size_t i = 0; i < r; ++i) {
        if (p.structure_constants[i].size() != r) {
            throw InvalidArgument("structure_constants[" + std::to_string(i) + "] has wrong length");
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (p.structure_constants[i][j].size() != r) {
                throw InvalidArgument("structure_constants[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "] has wrong length");
            }
            for (std::size_t k = 0; k < r; ++k) o->c_.push_back(p.structure_constants[i][j][k]);
        }
    }

    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Integer> ei(r, Integer(0));
        ei[i] = 1;
        std::vector<Integer> left(r, Integer(0));
        std::vector<Integer> right(r, Integer(0));
        for (std::size_t k = 0; k < r; ++k) {
            if (o->unity_[k] == 0) continue;
            const auto lk = basis_product(*o, k, i);
            const auto rk = basis_product(*o, i, k);
            for (std::size_t m = 0; m < r; ++m) {
                left[m] += o->unity_[k] * lk[m];
                right[m] += o->unity_[k] * rk[m];
            }
        }
        if (left != ei || right != ei) {
            throw InvalidArgument("unity is not a two-sided identity on basis element " + std::to_string(i) + " (" +
                                  o->labels_[i] + ")");
        }
    }

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const auto eij = basis_product(*o, i, j);
            for (std::size_t l = 0; l < r; ++l) {
                if (right_mul_basis(*o, eij, l) != left_mul_basis(*o, i, basis_product(*o, j, l))) {
                    throw InvalidArgument("structure constants are not associative on basis triple " + triple(i, j, l));
                }
            }
        }
    }

    o->spectral_degree_ = p.spectral_degree.value_or(r);
    if (o->spectral_degree_ == 0) throw InvalidArgument("spectral_degree must be >= 1");

    if (p.natural_rep) {
        NaturalRep& rep = *p.natural_rep;
        if (rep.images.size() != r) {
            throw InvalidArgument("natural representation needs " + std::to_string(r) + " images, got " +
                                  std::to_string(rep.images.size()));
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (rep.images[i].dim() != rep.dim) {
                throw InvalidArgument("natural representation image " + std::to_string(i) + " has wrong dimension");
            }
        }
        RatMatrix one(rep.dim);
        for (std::size_t k = 0; k < r; ++k) one += rep.images[k] * Rational(o->unity_[k]);
        if (!(one == RatMatrix::identity(rep.dim))) {
            throw InvalidArgument("natural representation does not send unity to the identity");
        }
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                RatMatrix expect(rep.dim);
                for (std::size_t k = 0; k < r; ++k) {
                    if (o->constant(i, j, k) != 0) expect += rep.images[k] * Rational(o->constant(i, j, k));
                }
                if (!(rep.images[i] * rep.images[j] == expect)) {
                    throw InvalidArgument("natural representation is not multiplicative on basis pair (" +
                                          std::to_string(i) + ", " + std::to_string(j) + ")");
                }
            }
        }
        o->natural_rep_ = std::move(rep);
    }
    return o;
}

AlgebraElement::AlgebraElement(OrderPtr order, std::vector<Rational> coords)
    : order_(std::move(order)), coords_(std::move(coords)) {
    if (!order_) throw InvalidArgument("element without an order");
    if (coords_.size() != order_->rank()) {
        throw Mismatch("element has " + std::to_string(coords_.size()) + " coordinates but order '" + order_->name() +
                       "' has rank " + std::to_string(order_->rank()));
    }
}

AlgebraElement AlgebraElement::zero(const OrderPtr& order) {
    return AlgebraElement(order, std::vector<Rational>(order->rank(), Rational(0)));
}

AlgebraElement AlgebraElement::unity(const OrderPtr& order) { return scalar(order, Rational(1)); }

AlgebraElement AlgebraElement::scalar(const OrderPtr& order, const Rational& q) {
    std::vector<Rational> c;
    c.reserve(order->rank());
    for (const auto& u : order->unity()) c.emplace_back(q * u);
    return AlgebraElement(order, std::move(c));
}

AlgebraElement AlgebraElement::basis(const OrderPtr& order, std::size_t i) {
    auto e = zero(order);
    e.coords_.at(i) = 1;
    return e;
}

bool AlgebraElement::in_order() const {
    for (const auto& q : coords_) {
        if (!is_integer(q)) return false;
    }
    return true;
}

void require_same_order(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.order() != y.order()) {
        throw Mismatch("elements belong to different orders ('" + x.order()->name() + "' vs '" + y.order()->name() + "')");
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
    for (auto& q : coords_) q *= s;
    return *this;
}

AlgebraElement element_mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_order(x, y);
    const Order& o = *x.order();
    const std::size_t r = o.rank();
    std::vector<Rational> out(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (x.coords()[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y.coords()[j] == 0) continue;
            const Rational xy = x.coords()[i] * y.coords()[j];
            for (std::size_t k = 0; k < r; ++k) {
                const Integer& c = o.constant(i, j, k);
                if (c != 0) out[k] += xy * c;
            }
        }
    }
    return AlgebraElement(x.order(), std::move(out));
}

AlgebraElement eval_poly(const RatPolynomial& f, const AlgebraElement& x) {
    AlgebraElement acc = AlgebraElement::zero(x.order());
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = element_mul(acc, x) + AlgebraElement::scalar(x.order(), *it);
    return acc;
}

RatMatrix left_regular_matrix(const AlgebraElement& x) {
    const std::size_t r = x.order()->rank();
    RatMatrix m(r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto col = element_mul(x, AlgebraElement::basis(x.order(), j));
        for (std::size_t i = 0; i < r; ++i) m(i, j) = col.coords()[i];
    }
    return m;
}

RatMatrix regular_representation(const AlgebraElement& x) {
    const auto& rep = x.order()->natural_rep();
    if (!rep) return left_regular_matrix(x);
    RatMatrix m(rep->dim);
    for (std::size_t k = 0; k < x.coords().size(); ++k) {
        if (x.coords()[k] != 0) m += rep->images[k] * x.coords()[k];
    }
    return m;
}

RatPolynomial minimal_polynomial_element(const AlgebraElement& x) {
    return minimal_polynomial(regular_representation(x));
}

bool is_integral_element(const AlgebraElement& x) { return has_integer_coeffs(minimal_polynomial_element(x)); }

ResidueStream::ResidueStream(OrderPtr order, Integer modulus)
    : order_(std::move(order)), m_(std::move(modulus)), digits_(order_->rank(), Integer(0)) {
    if (m_ < 1) throw InvalidArgument("residue modulus must be >= 1, got " + to_string(m_));
}

std::optional<AlgebraElement> ResidueStream::next() {
    if (done_) return std::nullopt;
    std::vector<Rational> c(digits_.begin(), digits_.end());
    AlgebraElement out(order_, std::move(c));
    std::size_t i = digits_.size();
    done_ = true;
    while (i-- > 0) {
        if (++digits_[i] < m_) {
            done_ = false;
            break;
        }
        digits_[i] = 0;
    }
    return out;
}

Integer ResidueStream::size() const {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), m_.get_mpz_t(), order_->rank());
    return s;
}

ResidueStream residue_enumeration(const OrderPtr& order, const Integer& m) { return ResidueStream(order, m); }

std::vector<AlgebraElement> residues(const OrderPtr& order, const Integer& m) {
    std::vector<AlgebraElement> out;
    ResidueStream s(order, m);
    while (auto e = s.next()) out.push_back(std::move(*e));
    return out;
}

Quaternion hurwitz_to_quaternion(const std::vector<Rational>& c) {
    if (c.size() != 4) throw Mismatch("Hurwitz coordinates need 4 entries");
    const Rational h = c[3] / 2;
    return {c[0] + h, c[1] + h, c[2] + h, h};
}

std::vector<Rational> quaternion_to_hurwitz(const Quaternion& q) {
    return {q[0] - q[3], q[1] - q[3], q[2] - q[3], 2 * q[3]};
}

} // namespace intval
