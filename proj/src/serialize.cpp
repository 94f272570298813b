#include "intval/serialize.hpp"

#include "intval/errors.hpp"

#include <sstream>

namespace intval {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw InvalidArgument("expected a rational string or integer, got " + j.dump());
}

namespace {

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string("expected a JSON array for ") + what + ", got " + j.dump());
    return j;
}

} // namespace

Json poly_to_json(const RatPolynomial& p) {
    Json out = Json::array();
    for (const auto& q : p.coeffs()) out.push_back(rational_to_json(q));
    return out;
}

Json poly_to_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (const auto& z : p.coeffs()) out.push_back(to_string(z));
    return out;
}

RatPolynomial poly_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& x : require_array(j, "polynomial")) c.push_back(rational_from_json(x));
    return RatPolynomial(std::move(c));
}

IntPolynomial int_poly_from_json(const Json& j) { return to_integer(poly_from_json(j)); }

Json matrix_to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(rational_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

RatMatrix matrix_from_json(const Json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : require_array(j, "matrix")) {
        std::vector<Rational> r;
        for (const auto& x : require_array(row, "matrix row")) r.push_back(rational_from_json(x));
        rows.push_back(std::move(r));
    }
    return RatMatrix(rows);
}

Json order_to_json(const Order& o) {
    Json out;
    out["name"] = o.name();
    out["rank"] = o.rank();
    out["labels"] = o.labels();
    Json unity = Json::array();
    for (const auto& u : o.unity()) unity.push_back(to_string(u));
    out["unity"] = unity;
    Json table = Json::array();
    for (std::size_t i = 0; i < o.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < o.rank(); ++j) {
            Json v = Json::array();
            for (std::size_t k = 0; k < o.rank(); ++k) v.push_back(to_string(o.constant(i, j, k)));
            row.push_back(std::move(v));
        }
        table.push_back(std::move(row));
    }
    out["structure_constants"] = std::move(table);
    out["spectral_degree"] = o.spectral_degree();
    if (const auto& rep = o.natural_rep()) {
        Json images = Json::array();
        for (const auto& m : rep->images) images.push_back(matrix_to_json(m));
        out["natural_rep"] = {{"dim", rep->dim}, {"images", std::move(images)}};
    }
    return out;
}

namespace {

Integer integer_from_json(const Json& j) {
    const Rational q = rational_from_json(j);
    if (!is_integer(q)) throw InvalidArgument("expected an integer, got " + j.dump());
    return q.get_num();
}

std::size_t positive_size(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw InvalidArgument(std::string(what) + " must be a positive integer, got " + j.dump());
    }
    return j.get<std::size_t>();
}

} // namespace

OrderPtr order_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("order file must be a JSON object");
    for (const char* key : {"structure_constants", "unity"}) {
        if (!j.contains(key)) throw InvalidArgument(std::string("order file is missing '") + key + "'");
    }
    Order::Presentation s;
    s.name = j.value("name", std::string("custom"));
    if (j.contains("labels")) {
        for (const auto& l : require_array(j["labels"], "labels")) {
            if (!l.is_string()) throw InvalidArgument("labels must be strings");
            s.labels.push_back(l.get<std::string>());
        }
    }
    for (const auto& row : require_array(j["structure_constants"], "structure_constants")) {
        std::vector<std::vector<Integer>> r;
        for (const auto& v : require_array(row, "structure_constants row")) {
            std::vector<Integer> vv;
            for (const auto& x : require_array(v, "structure_constants entry")) vv.push_back(integer_from_json(x));
            r.push_back(std::move(vv));
        }
        s.structure_constants.push_back(std::move(r));
    }
    for (const auto& u : require_array(j["unity"], "unity")) s.unity.push_back(integer_from_json(u));
    if (j.contains("rank") && positive_size(j["rank"], "rank") != s.structure_constants.size()) {
        throw InvalidArgument("rank " + j["rank"].dump() + " does not match structure_constants of size " +
                              std::to_string(s.structure_constants.size()));
    }
    if (j.contains("spectral_degree")) s.spectral_degree = positive_size(j["spectral_degree"], "spectral_degree");
    if (j.contains("natural_rep")) {
        const Json& nr = j["natural_rep"];
        if (!nr.is_object() || !nr.contains("dim") || !nr.contains("images")) {
            throw InvalidArgument("natural_rep needs 'dim' and 'images'");
        }
        NaturalRep rep;
        rep.dim = positive_size(nr["dim"], "natural_rep.dim");
        for (const auto& m : require_array(nr["images"], "natural_rep.images")) rep.images.push_back(matrix_from_json(m));
        s.natural_rep = std::move(rep);
    }
    return Order::make(std::move(s));
}

Json element_to_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (const auto& q : x.coords()) out.push_back(rational_to_json(q));
    return out;
}

AlgebraElement element_from_json(const OrderPtr& order, const Json& j) {
    std::vector<Rational> c;
    for (const auto& x : require_array(j, "element coordinates")) c.push_back(rational_from_json(x));
    return AlgebraElement(order, std::move(c));
}

std::vector<AlgebraElement> elements_from_json(const OrderPtr& order, const Json& j) {
    std::vector<AlgebraElement> out;
    for (const auto& e : require_array(j, "element list")) out.push_back(element_from_json(order, e));
    return out;
}

Json elements_to_json(const std::vector<AlgebraElement>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(element_to_json(x));
    return out;
}

std::string element_to_text(const AlgebraElement& x) {
    std::ostringstream out;
    bool first = true;
    const auto& labels = x.order()->labels();
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        Rational c = x.coords()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (labels[i] == "1") {
            out << to_string(c);
        } else {
            if (c != 1) out << to_string(c) << '*';
            out << labels[i];
        }
    }
    return first ? "0" : out.str();
}

Json verdict_to_json(const MembershipVerdict& v) {
    Json out;
    out["verdict"] = to_string(v.verdict);
    if (v.counterexample) {
        out["witness"] = element_to_json(*v.counterexample);
        out["witness_text"] = element_to_text(*v.counterexample);
    }
    if (v.certificate) out["certificate"] = poly_to_json(*v.certificate);
    out["checked_count"] = v.checked_count;
    return out;
}

Json sample_check_to_json(const SampleCheck& c) {
    Json out{{"holds", c.holds}, {"checked", c.checked}, {"skipped", c.skipped}};
    if (c.failure) out["failure"] = element_to_json(*c.failure);
    return out;
}

Json chain_report_to_json(const ChainReport& r) {
    return Json{{"pullback_on_sample", r.pullback_on_sample},
                {"member_int", verdict_to_json(r.int_verdict)},
                {"member_intval_on_sample", verdict_to_json(r.intval_verdict)},
                {"sample_size", r.sample_size},
                {"implications_intact", r.violations.empty()},
                {"violations", r.violations}};
}

} // namespace intval
