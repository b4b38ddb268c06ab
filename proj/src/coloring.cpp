#include "fermapprox/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fermapprox/errors.hpp"

namespace fermapprox {

bool Coloring::is_proper(const ConflictGraph& g) const {
  if (color_of.size() != g.num_vertices()) return false;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (color_of[v] >= num_colors) return false;
    for (auto u : g.neighbors(v))
      if (color_of[u] == color_of[v]) return false;
  }
  return true;
}

Coloring greedy_color(const ConflictGraph& g, const std::vector<std::size_t>& order) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Coloring c;
  c.color_of.assign(g.num_vertices(), unset);
  std::vector<char> used;
  for (auto v : order) {
    used.assign(g.degree(v) + 1, 0);
    for (auto u : g.neighbors(v)) {
      auto cu = c.color_of[u];
      if (cu != unset && cu < used.size()) used[cu] = 1;
    }
    std::size_t color = 0;
    while (used[color]) ++color;
    c.color_of[v] = color;
    c.num_colors = std::max(c.num_colors, color + 1);
  }
  if (std::find(c.color_of.begin(), c.color_of.end(), unset) != c.color_of.end())
    throw ValidationError("greedy_color: order does not cover every vertex");
  return c;
}

Coloring greedy_color(const ConflictGraph& g, const Hamiltonian& h) {
  if (g.num_vertices() != h.size()) throw ValidationError("greedy_color: graph/Hamiltonian size mismatch");
  std::vector<std::size_t> order(h.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Term positions already follow support order, so a stable sort on weight
  // gives the support tie-break.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(h.terms()[a].coefficient) > std::abs(h.terms()[b].coefficient);
  });
  return greedy_color(g, order);
}

IndependentSelection heaviest_class(const Coloring& c, const Hamiltonian& h) {
  if (c.color_of.size() != h.size()) throw ValidationError("heaviest_class: coloring/Hamiltonian size mismatch");
  IndependentSelection sel;
  if (h.empty()) return sel;

  std::vector<double> weight(c.num_colors, 0.0);
  for (std::size_t v = 0; v < h.size(); ++v) weight[c.color_of[v]] += std::abs(h.terms()[v].coefficient);
  std::size_t best = 0;
  for (std::size_t col = 1; col < weight.size(); ++col)
    if (weight[col] > weight[best]) best = col;

  sel.color = best;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (c.color_of[v] != best) continue;
    sel.terms.push_back(v);
    sel.weight += std::abs(h.terms()[v].coefficient);
  }
  return sel;
}

}  // namespace fermapprox
