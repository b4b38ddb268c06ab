#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fermapprox/hamiltonian.hpp"

namespace fermapprox {

/// H_n = sum_{a <= n < b} i c_a c_b over 2n generators: n^2 unit terms,
/// sparsity n, total weight n^2, largest eigenvalue n.
Hamiltonian optimality_family(std::size_t n);

enum class InstanceKind { strict_q, mixed_2_4, general };

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::mixed_2_4;
  std::size_t modes = 4;
  // strict_q: the single term size. Ignored otherwise.
  std::size_t q = 4;
  // general: allowed term sizes (even). mixed_2_4 always uses {2,4}.
  std::vector<std::size_t> sizes{2, 4, 6};
  std::size_t sparsity = 2;   // k: max terms per generator
  std::size_t num_terms = 6;  // exact number of terms to emit
  // |coefficient| drawn uniformly from [min_abs, max_abs], sign uniform.
  double min_abs = 0.1;
  double max_abs = 1.0;
  // Probability of proposing a term derived from existing ones (a sub-pair
  // of a larger term, or the union of two disjoint terms) so that nested
  // supports actually occur. Unused for strict_q.
  double nesting_bias = 0.35;
  std::uint64_t seed = 1;
};

/// Reproducible random instance whose sparsity never exceeds the request.
/// Throws ValidationError when the settings are inconsistent or when the term
/// count cannot be reached under the sparsity limit.
Hamiltonian random_instance(const GeneratorSpec& spec);

}  // namespace fermapprox
