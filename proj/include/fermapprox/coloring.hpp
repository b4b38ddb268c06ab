#pragma once

#include <cstddef>
#include <vector>

#include "fermapprox/conflict_graph.hpp"
#include "fermapprox/hamiltonian.hpp"

namespace fermapprox {

struct Coloring {
  std::vector<std::size_t> color_of;
  std::size_t num_colors = 0;

  bool is_proper(const ConflictGraph& g) const;
};

/// Sequential greedy coloring (smallest free color). Vertices are visited in
/// descending |H_Gamma| order, ties by support order. Uses at most
/// max_degree + 1 colors.
Coloring greedy_color(const ConflictGraph& g, const Hamiltonian& h);

// Visit order given explicitly.
Coloring greedy_color(const ConflictGraph& g, const std::vector<std::size_t>& order);

struct IndependentSelection {
  std::vector<std::size_t> terms;  // ascending term positions
  double weight = 0.0;             // sum of |H_Gamma| over terms
  std::size_t color = 0;
};

/// Color class with the largest total |H_Gamma|; lowest color id wins ties.
/// weight * num_colors >= m by pigeonhole.
IndependentSelection heaviest_class(const Coloring& c, const Hamiltonian& h);

}  // namespace fermapprox
