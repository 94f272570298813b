#pragma once

#include "intval/matrix.hpp"
#include "intval/polynomial.hpp"
#include "intval/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intval {

// A faithful representation smaller than the regular one: basis element i
// maps to images[i] (dim x dim, integer entries).
struct NaturalRep {
    std::size_t dim = 0;
    std::vector<RatMatrix> images;
};

class Order;
using OrderPtr = std::shared_ptr<const Order>;

// Unital associative ring, free of finite rank over Z, given by integer
// structure constants c[i][j][k] = coefficient of e_k in e_i * e_j.
// B = A (x) Q is the same table read over Q.
class Order {
public:
    struct Presentation {
        std::string name;
        std::vector<std::string> labels;
        // Nested r x r x r.
        std::vector<std::vector<std::vector<Integer>>> structure_constants;
        std::vector<Integer> unity;
        std::optional<std::size_t> spectral_degree;
        std::optional<NaturalRep> natural_rep;
    };

    // Validates shapes, two-sided unity and associativity on all r^3 basis
    // triples; errors name the offending index or triple.
    static OrderPtr make(Presentation p);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Integer& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * rank_ + j) * rank_ + k];
    }
    const std::vector<Integer>& unity() const { return unity_; }
    // The n of Lambda_n: bound on minimal polynomial degrees used by the
    // integral-closure constructions.
    std::size_t spectral_degree() const { return spectral_degree_; }
    const std::optional<NaturalRep>& natural_rep() const { return natural_rep_; }

private:
    Order() = default;

    std::string name_;
    std::size_t rank_ = 0;
    std::vector<std::string> labels_;
    std::vector<Integer> c_;
    std::vector<Integer> unity_;
    std::size_t spectral_degree_ = 0;
    std::optional<NaturalRep> natural_rep_;
};

// Element of B = A (x) Q by its rational coordinates; lies in A iff every
// coordinate is an integer.
class AlgebraElement {
public:
    AlgebraElement(OrderPtr order, std::vector<Rational> coords);

    static AlgebraElement zero(const OrderPtr& order);
    static AlgebraElement unity(const OrderPtr& order);
    static AlgebraElement scalar(const OrderPtr& order, const Rational& q);
    static AlgebraElement basis(const OrderPtr& order, std::size_t i);

    const OrderPtr& order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool in_order() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& s);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.order_ == b.order_ && a.coords_ == b.coords_;
    }

private:
    OrderPtr order_;
    std::vector<Rational> coords_;
};

void require_same_order(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement element_mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return element_mul(x, y); }

// f(x), scalars acting through the unity.
AlgebraElement eval_poly(const RatPolynomial& f, const AlgebraElement& x);

// Matrix of left multiplication y -> x*y in the basis (r x r), regardless
// of any natural representation.
RatMatrix left_regular_matrix(const AlgebraElement& x);

// The order's natural representation when it has one, otherwise the left
// regular representation.
RatMatrix regular_representation(const AlgebraElement& x);

RatPolynomial minimal_polynomial_element(const AlgebraElement& x);
bool is_integral_element(const AlgebraElement& x);

// The m^r coordinate-box representatives [0, m)^r of A / mA, last
// coordinate varying fastest.
class ResidueStream {
public:
    ResidueStream(OrderPtr order, Integer modulus);

    std::optional<AlgebraElement> next();
    // m^r
    Integer size() const;

private:
    OrderPtr order_;
    Integer m_;
    std::vector<Integer> digits_;
    bool done_ = false;
};

ResidueStream residue_enumeration(const OrderPtr& order, const Integer& m);
std::vector<AlgebraElement> residues(const OrderPtr& order, const Integer& m);

// integers, quadratic(m), quadratic_half(m) (m = 1 mod 4), lipschitz,
// hurwitz, matrix(k), triangular(k).
OrderPtr builtin(std::string_view name);
std::vector<std::string> builtin_names();

// Standard quaternion coordinates (q0, q1, q2, q3) of q0 + q1 i + q2 j + q3 k
// against coordinates in the Hurwitz basis {1, i, j, (1+i+j+k)/2}.
using Quaternion = std::array<Rational, 4>;
Quaternion hurwitz_to_quaternion(const std::vector<Rational>& coords);
std::vector<Rational> quaternion_to_hurwitz(const Quaternion& q);

} // namespace intval
