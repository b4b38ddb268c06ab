#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fermapprox/monomial.hpp"

namespace fermapprox {

/// coefficient * hermitize_phase(|support|) * prod_{j in support} c_j.
struct Term {
  Support support;
  double coefficient = 0.0;

  MajoranaMonomial op() const { return MajoranaMonomial::term_operator(support); }
  bool operator==(const Term&) const = default;
};

enum class LocalityClass { strict_q, mixed_2_4, general };

std::string_view to_string(LocalityClass c);

/// Validated Hamiltonian with exactly computed sparsity statistics.
///
/// Terms are kept in canonical order (lexicographic by support), so every
/// derived structure indexed by term position is independent of the order
/// the terms were supplied in.
class Hamiltonian {
 public:
  Hamiltonian() = default;

  std::size_t modes() const { return modes_; }
  std::size_t num_majoranas() const { return 2 * modes_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Max over generators of the number of terms containing it.
  std::size_t sparsity() const { return sparsity_; }
  std::size_t max_locality() const { return max_locality_; }
  std::size_t min_locality() const { return min_locality_; }
  // m = sum_Gamma |H_Gamma|
  double total_weight() const { return total_weight_; }
  LocalityClass locality_class() const { return locality_class_; }

  // Position of the term with this support, or npos.
  std::size_t find(const Support& support) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Per-generator list of term positions containing that generator.
  const std::vector<std::vector<std::size_t>>& incidence() const { return incidence_; }

  bool operator==(const Hamiltonian& o) const { return modes_ == o.modes_ && terms_ == o.terms_; }

 private:
  friend Hamiltonian analyze(std::vector<Term> terms, std::size_t modes);

  std::size_t modes_ = 0;
  std::vector<Term> terms_;
  std::size_t sparsity_ = 0;
  std::size_t max_locality_ = 0;
  std::size_t min_locality_ = 0;
  double total_weight_ = 0.0;
  LocalityClass locality_class_ = LocalityClass::strict_q;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Validates a raw term list and computes k, q, m and the locality class.
/// Throws ValidationError on duplicate supports, odd or empty supports,
/// non-increasing indices, out-of-range indices, or zero coefficients.
Hamiltonian analyze(std::vector<Term> terms, std::size_t modes);

}  // namespace fermapprox
