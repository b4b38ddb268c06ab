#include "fermapprox/conflict_graph.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "fermapprox/errors.hpp"

namespace fermapprox {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::mixed24: return "mixed24";
    case Regime::strict_q: return "strictq";
    case Regime::general: return "general";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view s) {
  if (s == "mixed24" || s == "mixed-2-4") return Regime::mixed24;
  if (s == "strictq" || s == "strict-q") return Regime::strict_q;
  if (s == "general") return Regime::general;
  return std::nullopt;
}

Regime auto_regime(const Hamiltonian& h) {
  switch (h.locality_class()) {
    case LocalityClass::strict_q: return Regime::strict_q;
    case LocalityClass::mixed_2_4: return Regime::mixed24;
    case LocalityClass::general: return Regime::general;
  }
  return Regime::general;
}

std::size_t degree_bound(Regime r, const Hamiltonian& h) {
  const std::size_t k = h.sparsity();
  const std::size_t q = h.max_locality();
  switch (r) {
    case Regime::mixed24: return 4 * k;
    case Regime::strict_q: return q * k;
    case Regime::general: return k == 0 ? 0 : q * k + k * (q * k - 1);
  }
  return 0;
}

std::size_t approximation_denominator(Regime r, const Hamiltonian& h) { return degree_bound(r, h) + 1; }

ConflictGraph::ConflictGraph(Regime regime, std::vector<std::vector<std::size_t>> adjacency)
    : regime_(regime), adjacency_(std::move(adjacency)) {
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (auto u : nb) {
      if (u == v) throw ValidationError("conflict graph: self-loop");
      if (u >= adjacency_.size()) throw ValidationError("conflict graph: vertex out of range");
    }
    max_degree_ = std::max(max_degree_, nb.size());
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    for (auto u : adjacency_[v])
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v))
        throw ValidationError("conflict graph: asymmetric adjacency");
}

std::size_t ConflictGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

bool ConflictGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool ConflictGraph::is_independent(const std::vector<std::size_t>& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || adjacent(vertices[a], vertices[b])) return false;
  return true;
}

std::string ConflictGraph::edge_list() const {
  std::string out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    for (auto u : adjacency_[v])
      if (v < u) out += std::to_string(v) + " " + std::to_string(u) + "\n";
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> overlap_edges(const Hamiltonian& h) {
  std::vector<std::vector<std::size_t>> adj(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) {
    for (auto j : h.terms()[v].support)
      for (auto u : h.incidence()[j])
        if (u != v) adj[v].push_back(u);
  }
  return adj;
}

void add_edge(std::vector<std::vector<std::size_t>>& adj, std::size_t u, std::size_t v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void enforce_bound(const ConflictGraph& g, const Hamiltonian& h) {
  const auto bound = degree_bound(g.regime(), h);
  if (g.max_degree() > bound)
    throw GuaranteeViolation("conflict graph (" + std::string(to_string(g.regime())) + ") max degree " +
                             std::to_string(g.max_degree()) + " exceeds bound " + std::to_string(bound));
}

}  // namespace

ConflictGraph build_mixed24(const Hamiltonian& h) {
  for (const auto& t : h.terms())
    if (t.support.size() != 2 && t.support.size() != 4)
      throw ValidationError("mixed24 regime requires term sizes in {2,4}");

  auto adj = overlap_edges(h);
  // (ii): the union of two disjoint terms can only be a term when both are
  // 2-local and the union is 4-local, so split every 4-local term into its
  // three pairings and look both halves up.
  static constexpr std::array<std::array<int, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& t : h.terms()) {
    if (t.support.size() != 4) continue;
    for (const auto& s : splits) {
      auto a = h.find({t.support[s[0]], t.support[s[1]]});
      auto b = h.find({t.support[s[2]], t.support[s[3]]});
      if (a != Hamiltonian::npos && b != Hamiltonian::npos) add_edge(adj, a, b);
    }
  }
  ConflictGraph g(Regime::mixed24, std::move(adj));
  enforce_bound(g, h);
  audit_two_local_degrees(g, h);
  return g;
}

ConflictGraph build_strict_q(const Hamiltonian& h) {
  if (h.min_locality() != h.max_locality())
    throw ValidationError("strictq regime requires all terms to have the same size");
  ConflictGraph g(Regime::strict_q, overlap_edges(h));
  enforce_bound(g, h);
  return g;
}

ConflictGraph build_general(const Hamiltonian& h) {
  auto adj = overlap_edges(h);
  std::vector<std::size_t> hits(h.size(), 0);
  std::vector<std::size_t> touched;
  std::vector<std::size_t> inside;
  for (std::size_t outer = 0; outer < h.size(); ++outer) {
    const auto& sup = h.terms()[outer].support;
    touched.clear();
    for (auto j : sup)
      for (auto t : h.incidence()[j]) {
        if (hits[t]++ == 0) touched.push_back(t);
      }
    inside.clear();
    for (auto t : touched) {
      if (t != outer && hits[t] == h.terms()[t].support.size()) inside.push_back(t);
      hits[t] = 0;
    }
    for (std::size_t a = 0; a < inside.size(); ++a)
      for (std::size_t b = a + 1; b < inside.size(); ++b) add_edge(adj, inside[a], inside[b]);
  }
  ConflictGraph g(Regime::general, std::move(adj));
  enforce_bound(g, h);
  return g;
}

ConflictGraph build_conflict_graph(const Hamiltonian& h, Regime regime) {
  switch (regime) {
    case Regime::mixed24: return build_mixed24(h);
    case Regime::strict_q: return build_strict_q(h);
    case Regime::general: return build_general(h);
  }
  throw ValidationError("unknown regime");
}

std::vector<TwoLocalDegreeAudit> audit_two_local_degrees(const ConflictGraph& g, const Hamiltonian& h) {
  std::vector<TwoLocalDegreeAudit> out;
  const std::size_t k = h.sparsity();
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h.terms()[v].support.size() != 2) continue;
    std::set<std::size_t> four, two;
    for (auto j : h.terms()[v].support)
      for (auto u : h.incidence()[j]) {
        if (u == v) continue;
        (h.terms()[u].support.size() == 4 ? four : two).insert(u);
      }
    TwoLocalDegreeAudit a{v, four.size(), two.size(), g.degree(v)};
    if (a.degree > 2 * a.overlapping_four_local + a.overlapping_two_local)
      throw GuaranteeViolation("vertex " + std::to_string(v) + ": degree exceeds 2a+b");
    if (2 * a.overlapping_four_local + a.overlapping_two_local > 4 * k)
      throw GuaranteeViolation("vertex " + std::to_string(v) + ": 2a+b exceeds 4k");
    out.push_back(a);
  }
  return out;
}

}  // namespace fermapprox
