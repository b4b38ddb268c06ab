#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fermapprox/hamiltonian.hpp"

namespace fermapprox {

// Instance text format (one directive per line, 1-based indices):
//
//   # comment
//   modes <n>
//   term <j1> <j2> ... <jq> <coefficient>
//
// Blank lines and lines starting with '#' are ignored. `modes` must appear
// exactly once and before any `term`. Indices within a term are strictly
// increasing; the term denotes coefficient * hermitize_phase(q) * c_j1...c_jq.
// Errors are reported as ValidationError with a "line N: " prefix.
Hamiltonian parse_instance(std::string_view text);

// Canonical form: header, then terms in lexicographic support order with
// shortest round-trip decimal coefficients. parse(serialize(h)) == h.
std::string serialize_instance(const Hamiltonian& h);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// FNV-1a 64-bit over serialize_instance(h), as 16 lowercase hex digits.
std::string instance_hash(const Hamiltonian& h);

}  // namespace fermapprox
