#include "fermapprox/state_builder.hpp"

#include <algorithm>
#include <cmath>

#include "fermapprox/errors.hpp"
#include "fermapprox/monomial.hpp"

namespace fermapprox {

namespace {

int sign_of(double x) { return x < 0 ? -1 : 1; }

// i c_g c_h, the generator of one matched pair.
MajoranaMonomial pair_operator(const MatchedPair& p) { return MajoranaMonomial({p.first, p.second}, Phase::i()); }

// Scalar sign s with product == s * I; GuaranteeViolation if not a real scalar.
int scalar_sign(const MajoranaMonomial& product, const char* what) {
  if (!product.is_scalar() || !product.phase().is_real())
    throw GuaranteeViolation(std::string(what) + ": expected +-I, got " + product.str());
  return product.phase().real_sign();
}

}  // namespace

std::vector<std::size_t> find_collisions(const std::vector<std::size_t>& selected, const Hamiltonian& h) {
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(h.num_majoranas(), none);
  for (std::size_t s = 0; s < selected.size(); ++s)
    for (auto j : h.terms()[selected[s]].support) {
      if (owner[j] != none) throw ValidationError("find_collisions: selected supports overlap");
      owner[j] = s;
    }

  std::vector<std::size_t> hits(selected.size(), 0);
  for (const auto& t : h.terms()) {
    std::vector<std::size_t> seen;
    for (auto j : t.support) {
      auto o = owner[j];
      if (o != none && hits[o]++ == 0) seen.push_back(o);
    }
    std::vector<std::size_t> inside;
    std::size_t covered = 0;
    for (auto o : seen) {
      if (hits[o] == h.terms()[selected[o]].support.size()) {
        inside.push_back(o);
        covered += hits[o];
      }
      hits[o] = 0;
    }
    if (inside.size() >= 2 && covered == t.support.size()) {
      std::sort(inside.begin(), inside.end());
      return inside;
    }
  }
  return {};
}

StabilizerSolution build_stabilizer(const IndependentSelection& sel, const Hamiltonian& h, const ConflictGraph& g) {
  if (g.num_vertices() != h.size()) throw ValidationError("build_stabilizer: graph/Hamiltonian size mismatch");
  for (auto t : sel.terms)
    if (t >= h.size()) throw ValidationError("build_stabilizer: term position out of range");
  if (!g.is_independent(sel.terms)) throw ValidationError("build_stabilizer: selection is not independent");

  StabilizerSolution out;
  out.modes = h.modes();
  std::vector<MajoranaMonomial> ops;
  for (auto t : sel.terms) {
    const auto& term = h.terms()[t];
    out.generators.push_back({t, sign_of(term.coefficient)});
    out.certified_energy += std::abs(term.coefficient);
    ops.push_back(term.op());
  }

  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      if (!commutes(ops[a], ops[b]))
        throw GuaranteeViolation("stabilizer generators " + ops[a].str() + " and " + ops[b].str() + " anticommute");

  auto hit = find_collisions(sel.terms, h);
  if (!hit.empty())
    throw GuaranteeViolation("a Hamiltonian term is a product of " + std::to_string(hit.size()) +
                             " selected generators");
  return out;
}

bool MatchingPlan::is_dependent(std::size_t pair) const {
  auto o = pairs[pair].owner;
  return o >= 0 && groups[static_cast<std::size_t>(o)].back() == pair;
}

std::size_t MatchingPlan::num_free() const { return pairs.size() - groups.size(); }

MatchingPlan build_matching_plan(const StabilizerSolution& stab, const Hamiltonian& h) {
  MatchingPlan plan;
  plan.modes = h.modes();
  const std::size_t n2 = h.num_majoranas();
  std::vector<char> used(n2, 0);

  for (std::size_t s = 0; s < stab.generators.size(); ++s) {
    const auto& gen = stab.generators[s];
    const auto& sup = h.terms()[gen.term].support;
    plan.selected_terms.push_back(gen.term);
    plan.selected_signs.push_back(gen.sign);
    for (std::size_t a = 0; a < sup.size(); a += 2) {
      if (used[sup[a]] || used[sup[a + 1]]) throw ValidationError("build_matching_plan: selected supports overlap");
      used[sup[a]] = used[sup[a + 1]] = 1;
      plan.pairs.push_back({sup[a], sup[a + 1], static_cast<std::int64_t>(s)});
    }
  }
  MajoranaIndex pending = 0;
  bool have_pending = false;
  for (std::size_t j = 0; j < n2; ++j) {
    if (used[j]) continue;
    if (have_pending) {
      plan.pairs.push_back({pending, static_cast<MajoranaIndex>(j), -1});
      have_pending = false;
    } else {
      pending = static_cast<MajoranaIndex>(j);
      have_pending = true;
    }
  }
  // 2n is even and every selected support is even, so nothing is left over.
  std::sort(plan.pairs.begin(), plan.pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.first < b.first; });

  plan.pair_of.assign(n2, 0);
  plan.groups.assign(plan.selected_terms.size(), {});
  for (std::size_t p = 0; p < plan.pairs.size(); ++p) {
    plan.pair_of[plan.pairs[p].first] = plan.pair_of[plan.pairs[p].second] = p;
    if (plan.pairs[p].owner >= 0) plan.groups[static_cast<std::size_t>(plan.pairs[p].owner)].push_back(p);
  }

  for (std::size_t s = 0; s < plan.selected_terms.size(); ++s) {
    auto product = MajoranaMonomial::identity();
    for (auto p : plan.groups[s]) product = product * pair_operator(plan.pairs[p]);
    product = product * h.terms()[plan.selected_terms[s]].op();
    const int parity = scalar_sign(product, "matching parity");
    plan.parity.push_back(parity);
    plan.target.push_back(parity * plan.selected_signs[s]);
  }
  return plan;
}

bool is_full(const SignAssignment& z) {
  return std::none_of(z.begin(), z.end(), [](std::int8_t v) { return v == 0; });
}

bool satisfies_constraints(const MatchingPlan& plan, const SignAssignment& z) {
  if (z.size() != plan.num_pairs()) return false;
  for (std::size_t s = 0; s < plan.groups.size(); ++s) {
    int prod = 1;
    bool complete = true;
    for (auto p : plan.groups[s]) {
      if (z[p] == 0) complete = false;
      prod *= z[p];
    }
    if (complete && prod != plan.target[s]) return false;
  }
  return true;
}

EnergyModel::EnergyModel(const MatchingPlan& plan, const Hamiltonian& h) : plan_(plan) {
  if (plan.pair_of.size() != h.num_majoranas()) throw ValidationError("EnergyModel: plan/Hamiltonian mode mismatch");
  for (std::size_t t = 0; t < h.size(); ++t) {
    const auto& sup = h.terms()[t].support;
    std::vector<std::size_t> pairs;
    bool closed = true;
    for (auto j : sup) {
      const auto& p = plan.pairs[plan.pair_of[j]];
      const auto other = p.first == j ? p.second : p.first;
      if (!std::binary_search(sup.begin(), sup.end(), other)) {
        closed = false;
        break;
      }
      if (p.first == j) pairs.push_back(plan.pair_of[j]);
    }
    if (!closed) continue;
    std::sort(pairs.begin(), pairs.end());
    // Tr(c^Gamma prod_p P_p) / 2^n with prod_p P_p proportional to c^Gamma.
    auto product = MajoranaMonomial::identity();
    for (auto p : pairs) product = product * pair_operator(plan.pairs[p]);
    product = product * h.terms()[t].op();
    const int sign = scalar_sign(product, "energy contribution");
    std::vector<Block> blocks;
    for (auto p : pairs) {
      const auto owner = plan.pairs[p].owner;
      auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.owner == owner; });
      if (it == blocks.end())
        blocks.push_back({owner, {p}});
      else
        it->pairs.push_back(p);
    }
    contributions_.push_back({t, h.terms()[t].coefficient * sign, std::move(pairs), std::move(blocks)});
  }
}

double EnergyModel::expectation(const SignAssignment& z) const {
  const auto& plan = plan_;
  if (z.size() != plan.num_pairs()) throw ValidationError("sign assignment has wrong length");

  const std::size_t ngroups = plan.groups.size();
  std::vector<std::size_t> unset(ngroups, 0);
  std::vector<int> fixed_product(ngroups, 1);
  for (std::size_t s = 0; s < ngroups; ++s) {
    for (auto p : plan.groups[s]) {
      if (z[p] == 0)
        ++unset[s];
      else
        fixed_product[s] *= z[p];
    }
    if (unset[s] == 0 && fixed_product[s] != plan.target[s])
      throw ValidationError("sign assignment violates the parity constraint of selected term " + std::to_string(s));
  }

  double total = 0.0;
  for (const auto& c : contributions_) {
    int value = 1;
    for (const auto& blk : c.blocks) {
      std::size_t missing = 0;
      int prod = 1;
      for (auto p : blk.pairs) {
        if (z[p] == 0)
          ++missing;
        else
          prod *= z[p];
      }
      if (missing == 0) {
        value *= prod;
      } else if (blk.owner >= 0 && missing == unset[static_cast<std::size_t>(blk.owner)]) {
        // Every unassigned pair of the group appears, so their product is forced.
        const auto s = static_cast<std::size_t>(blk.owner);
        value *= prod * plan.target[s] * fixed_product[s];
      } else {
        // Some unassigned pair has a uniform marginal given the others.
        value = 0;
        break;
      }
    }
    total += c.weight * value;
  }
  return total;
}

double energy_of_z(const MatchingPlan& plan, const SignAssignment& z, const Hamiltonian& h) {
  return EnergyModel(plan, h).expectation(z);
}

bool CovarianceMatrix::is_antisymmetric() const {
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (at(r, c) != -at(c, r)) return false;
  return true;
}

bool CovarianceMatrix::squares_to_minus_identity() const {
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      long long acc = 0;
      for (std::size_t t = 0; t < dim; ++t) acc += static_cast<long long>(at(r, t)) * at(t, c);
      if (acc != (r == c ? -1 : 0)) return false;
    }
  return true;
}

CovarianceMatrix covariance_of(const MatchingPlan& plan, const SignAssignment& z) {
  if (z.size() != plan.num_pairs() || !is_full(z)) throw ValidationError("covariance_of: requires a full assignment");
  CovarianceMatrix m;
  m.dim = 2 * plan.modes;
  m.entries.assign(m.dim * m.dim, 0);
  for (std::size_t p = 0; p < plan.num_pairs(); ++p) {
    const auto g = plan.pairs[p].first, hh = plan.pairs[p].second;
    m.entries[g * m.dim + hh] = z[p];
    m.entries[hh * m.dim + g] = -z[p];
  }
  return m;
}

GaussianSolution derandomize(const MatchingPlan& plan, const Hamiltonian& h) {
  EnergyModel model(plan, h);
  GaussianSolution out;
  out.plan = plan;
  SignAssignment z(plan.num_pairs(), 0);
  out.trajectory.push_back(model.expectation(z));

  for (std::size_t p = 0; p < plan.num_pairs(); ++p) {
    if (plan.is_dependent(p)) {
      const auto s = static_cast<std::size_t>(plan.pairs[p].owner);
      int prod = 1;
      for (auto q : plan.groups[s])
        if (q != p) prod *= z[q];
      z[p] = static_cast<std::int8_t>(plan.target[s] * prod);
    } else {
      z[p] = 1;
      const double up = model.expectation(z);
      z[p] = -1;
      const double down = model.expectation(z);
      z[p] = down > up + 1e-12 * (1.0 + std::abs(up)) ? -1 : 1;
    }
    out.trajectory.push_back(model.expectation(z));
  }

  out.energy = out.trajectory.back();
  out.covariance = covariance_of(plan, z);
  out.z = std::move(z);
  return out;
}

std::vector<SignAssignment> enumerate_valid_assignments(const MatchingPlan& plan, std::size_t max_free) {
  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < plan.num_pairs(); ++p)
    if (!plan.is_dependent(p)) free.push_back(p);
  if (free.size() > max_free)
    throw ValidationError("enumerate_valid_assignments: " + std::to_string(free.size()) + " free pairs exceed limit");

  std::vector<SignAssignment> out;
  const std::size_t count = std::size_t{1} << free.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    SignAssignment z(plan.num_pairs(), 0);
    for (std::size_t f = 0; f < free.size(); ++f) z[free[f]] = (mask >> f) & 1 ? -1 : 1;
    for (std::size_t s = 0; s < plan.groups.size(); ++s) {
      int prod = plan.target[s];
      for (auto q : plan.groups[s])
        if (q != plan.groups[s].back()) prod *= z[q];
      z[plan.groups[s].back()] = static_cast<std::int8_t>(prod);
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace fermapprox
