#include "intval/rational.hpp"

#include "intval/errors.hpp"

#include <cctype>

namespace intval {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Integer parse_integer(std::string_view text) {
    const std::string s = strip(text);
    if (!valid_integer_text(s)) throw InvalidArgument("malformed integer: '" + std::string(text) + "'");
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    const std::string s = strip(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
        throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    }
    Integer d(den, 10);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(num, 10), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer mod_floor(const Integer& z, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace intval
