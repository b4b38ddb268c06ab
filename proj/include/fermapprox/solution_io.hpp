#pragma once

#include <string>
#include <string_view>

#include "fermapprox/hamiltonian.hpp"
#include "fermapprox/pipeline.hpp"

namespace fermapprox {

// Solution text format, line oriented, 1-based generator indices:
//
//   fermapprox-solution 1
//   instance <16 hex digits>       instance_hash() of the source Hamiltonian
//   modes <n>
//   regime <mixed24|strictq|general>
//   max_degree <d>
//   num_colors <c>
//   Q <Q>
//   certified_energy <real>
//   gaussian_energy <real>
//   selected <count>
//   select <j1> ... <jq> <sign>    one per selected term, sign is +1 or -1
//   pairs <count>
//   pair <g> <h> <owner> <z>       owner: 1-based select line, 0 = leftover
//   covariance <2n>
//   <2n integers>                  one row per line
//   end
std::string serialize_solution(const Solution& sol, const Hamiltonian& h);

/// Parses a solution written for `h`. Throws ValidationError when the text is
/// malformed or was written for a different instance (hash mismatch).
/// Structural claims are not re-derived here; audit() does that.
Solution parse_solution(std::string_view text, const Hamiltonian& h);

}  // namespace fermapprox
