#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermapprox/hamiltonian.hpp"

namespace fermapprox {

enum class Regime { mixed24, strict_q, general };

std::string_view to_string(Regime r);
// Accepts "mixed24", "strictq", "general" (and the hyphenated to_string forms).
std::optional<Regime> parse_regime(std::string_view s);

/// Tightest applicable regime: strict when all term sizes agree, mixed24
/// when sizes are within {2,4}, otherwise general.
Regime auto_regime(const Hamiltonian& h);

/// Maximum degree allowed in each regime: 4k, qk, or qk + k(qk-1).
std::size_t degree_bound(Regime r, const Hamiltonian& h);

/// Approximation denominator Q = degree_bound + 1.
std::size_t approximation_denominator(Regime r, const Hamiltonian& h);

/// Undirected graph on term positions of a Hamiltonian. Vertex v is term
/// h.terms()[v]; neighbor lists are sorted and symmetric.
class ConflictGraph {
 public:
  ConflictGraph(Regime regime, std::vector<std::vector<std::size_t>> adjacency);

  Regime regime() const { return regime_; }
  std::size_t num_vertices() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t num_edges() const;
  bool adjacent(std::size_t u, std::size_t v) const;
  bool is_independent(const std::vector<std::size_t>& vertices) const;

  // "u v" per line, u < v, 0-based vertex ids.
  std::string edge_list() const;

 private:
  Regime regime_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t max_degree_ = 0;
};

// Edges from shared generators (i), plus disjoint pairs whose union is a
// term (ii). Requires every size in {2,4}. Throws GuaranteeViolation if a
// degree exceeds 4k.
ConflictGraph build_mixed24(const Hamiltonian& h);

// Shared-generator edges only. Requires a single term size q. Degree <= qk.
ConflictGraph build_strict_q(const Hamiltonian& h);

// Shared-generator edges plus every pair of terms strictly contained in a
// common third term. Degree <= qk + k(qk-1) with q the max term size.
ConflictGraph build_general(const Hamiltonian& h);

ConflictGraph build_conflict_graph(const Hamiltonian& h, Regime regime);

/// Per-vertex numbers behind the mixed24 degree argument for 2-local terms.
struct TwoLocalDegreeAudit {
  std::size_t vertex;
  std::size_t overlapping_four_local;  // a
  std::size_t overlapping_two_local;   // b
  std::size_t degree;
};

// For each 2-local vertex of a mixed24 graph: checks degree <= 2a + b and
// 2a + b <= 4k, throwing GuaranteeViolation otherwise.
std::vector<TwoLocalDegreeAudit> audit_two_local_degrees(const ConflictGraph& g, const Hamiltonian& h);

}  // namespace fermapprox
