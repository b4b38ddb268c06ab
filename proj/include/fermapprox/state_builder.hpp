#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fermapprox/coloring.hpp"
#include "fermapprox/conflict_graph.hpp"
#include "fermapprox/hamiltonian.hpp"

namespace fermapprox {

struct StabilizerGenerator {
  std::size_t term;  // position in Hamiltonian::terms()
  int sign;          // sign(H_Gamma)
};

/// rho = 2^-n prod_{Gamma in S} (I + sign(H_Gamma) c^Gamma).
struct StabilizerSolution {
  std::size_t modes = 0;
  std::vector<StabilizerGenerator> generators;
  double certified_energy = 0.0;  // sum_{Gamma in S} |H_Gamma|
};

/// Builds the stabilizer state for an independent set of `g`. Throws
/// ValidationError if the selection is not independent, and
/// GuaranteeViolation if the generators fail to commute or a product of two
/// or more of them reproduces a term of h.
StabilizerSolution build_stabilizer(const IndependentSelection& sel, const Hamiltonian& h, const ConflictGraph& g);

/// Positions (into `selected`) of a term of h that equals, up to phase, a
/// product of two or more selected generators; empty when none. Selected
/// supports must be pairwise disjoint.
std::vector<std::size_t> find_collisions(const std::vector<std::size_t>& selected, const Hamiltonian& h);

struct MatchedPair {
  MajoranaIndex first;
  MajoranaIndex second;
  // Index into MatchingPlan::selected_terms, or -1 for the leftover matching.
  std::int64_t owner;

  bool operator==(const MatchedPair&) const = default;
};

/// Perfect matching of all 2n generators: consecutive pairs within every
/// selected support, consecutive pairs over the remaining generators.
struct MatchingPlan {
  std::size_t modes = 0;
  std::vector<std::size_t> selected_terms;
  std::vector<int> selected_signs;       // sign(H_Gamma) per selected term
  std::vector<MatchedPair> pairs;        // sorted by `first`
  std::vector<std::vector<std::size_t>> groups;  // pair positions per selected term, ascending
  // s_Gamma: sign of (prod_{gh in M_Gamma} i c_g c_h) c^Gamma, a multiple of I.
  std::vector<int> parity;
  // Required product of z over each group: s_Gamma * sign(H_Gamma).
  std::vector<int> target;
  std::vector<std::size_t> pair_of;      // generator -> pair position

  std::size_t num_pairs() const { return pairs.size(); }
  // The last pair of each group is fixed by the group's parity constraint.
  bool is_dependent(std::size_t pair) const;
  std::size_t num_free() const;

  bool operator==(const MatchingPlan&) const = default;
};

MatchingPlan build_matching_plan(const StabilizerSolution& stab, const Hamiltonian& h);

/// Pair signs z in {+1,-1}; 0 marks an unassigned pair.
using SignAssignment = std::vector<std::int8_t>;

bool is_full(const SignAssignment& z);
// Every fully assigned group meets its target product.
bool satisfies_constraints(const MatchingPlan& plan, const SignAssignment& z);

/// Closed form of Tr(H rho'(z)), and its conditional expectation when z is
/// partial (unassigned pairs drawn from the constrained uniform
/// distribution). Only terms whose support is a union of matched pairs
/// contribute.
class EnergyModel {
 public:
  EnergyModel(const MatchingPlan& plan, const Hamiltonian& h);

  // Throws ValidationError if a fully assigned group violates its constraint.
  double expectation(const SignAssignment& z) const;

  struct Block {
    std::int64_t owner;              // selected group, or -1 for leftover pairs
    std::vector<std::size_t> pairs;
  };
  struct Contribution {
    std::size_t term;
    double weight;                   // H_Gamma times the exact sign of (prod P_p) c^Gamma
    std::vector<std::size_t> pairs;  // ascending
    std::vector<Block> blocks;       // pairs grouped by owner
  };
  const std::vector<Contribution>& contributions() const { return contributions_; }

 private:
  MatchingPlan plan_;
  std::vector<Contribution> contributions_;
};

double energy_of_z(const MatchingPlan& plan, const SignAssignment& z, const Hamiltonian& h);

struct CovarianceMatrix {
  std::size_t dim = 0;
  std::vector<int> entries;  // row-major

  int at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  bool is_antisymmetric() const;
  // M*M == -I, computed in integers.
  bool squares_to_minus_identity() const;
};

// Entry (g,h) = z_gh and (h,g) = -z_gh for each matched pair. Requires full z.
CovarianceMatrix covariance_of(const MatchingPlan& plan, const SignAssignment& z);

struct GaussianSolution {
  MatchingPlan plan;
  SignAssignment z;
  CovarianceMatrix covariance;
  double energy = 0.0;
  // Conditional expectation before any pair is fixed, then after each pair.
  std::vector<double> trajectory;
};

/// Method of conditional expectations over the pairs in order; the dependent
/// pair of each group takes the value its constraint forces. Ties pick +1.
GaussianSolution derandomize(const MatchingPlan& plan, const Hamiltonian& h);

/// Every constraint-satisfying full assignment: free pairs run through all
/// 2^f sign patterns and dependent pairs follow. Throws ValidationError when
/// more than `max_free` pairs are free.
std::vector<SignAssignment> enumerate_valid_assignments(const MatchingPlan& plan, std::size_t max_free = 20);

}  // namespace fermapprox
