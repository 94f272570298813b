#pragma once

#include "intval/serialize.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace intval {

// End-to-end reproductions of the worked examples: zsqrt3, hurwitz,
// lipschitz, triangular, companion. Each report carries a list of
// {name, pass, detail} assertions and "all_pass".
Json example_report(std::string_view name, std::uint64_t seed = 0, std::uint64_t count = 200);
std::vector<std::string> example_names();

// Bounded corroboration drivers reporting {check, instances, failures}:
// three-squares, hurwitz, triangular, companion, refute.
Json density_report(std::string_view check, std::uint64_t seed = 0, std::uint64_t count = 200);
std::vector<std::string> density_checks();

// x^2 (x^2 + 1) / 2
RatPolynomial non_dense_witness_poly();

} // namespace intval
