#pragma once

#include "intval/matrix.hpp"
#include "intval/membership.hpp"
#include "intval/order.hpp"
#include "intval/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace intval {

using Json = nlohmann::json;

// Rational scalars travel as strings "n" or "n/d"; plain JSON integers are
// accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Ascending-degree coefficient arrays, e.g. ["0","0","1/2","0","1/2"].
Json poly_to_json(const RatPolynomial& p);
Json poly_to_json(const IntPolynomial& p);
RatPolynomial poly_from_json(const Json& j);
IntPolynomial int_poly_from_json(const Json& j);

// Row-major arrays of rows: [["0","1/2"],["0","0"]].
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {name?, rank, labels, unity, structure_constants, spectral_degree?,
//  natural_rep?: {dim, images: [matrix, ...]}}
Json order_to_json(const Order& o);
OrderPtr order_from_json(const Json& j);

Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const OrderPtr& order, const Json& j);
std::vector<AlgebraElement> elements_from_json(const OrderPtr& order, const Json& j);
Json elements_to_json(const std::vector<AlgebraElement>& xs);

// "1/2 + 1/2*t" in the order's basis labels.
std::string element_to_text(const AlgebraElement& x);

// {verdict, witness?, certificate?, checked_count}
Json verdict_to_json(const MembershipVerdict& v);

Json sample_check_to_json(const SampleCheck& c);

Json chain_report_to_json(const ChainReport& r);

} // namespace intval
