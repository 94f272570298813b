#pragma once

#include <stdexcept>
#include <string>

namespace intval {

// Malformed or out-of-contract input: shapes, non-monic divisors, zero
// polynomials where a nonzero one is required, unknown names.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two operands that must share an order (or a dimension) do not.
class Mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of a check does not hold, as opposed to the
// check itself failing.
class PreconditionFailed : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Construction would exceed a configured size bound.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace intval
