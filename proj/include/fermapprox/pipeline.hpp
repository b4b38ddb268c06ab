#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fermapprox/coloring.hpp"
#include "fermapprox/conflict_graph.hpp"
#include "fermapprox/hamiltonian.hpp"
#include "fermapprox/state_builder.hpp"

namespace fermapprox {

/// Everything the approximation produces for one Hamiltonian.
struct Solution {
  Regime regime = Regime::general;
  std::size_t max_degree = 0;
  std::size_t num_colors = 0;
  std::size_t denominator = 1;  // Q for the regime
  IndependentSelection selection;
  StabilizerSolution stabilizer;
  GaussianSolution gaussian;
};

/// analyze -> conflict graph -> greedy coloring -> heaviest class ->
/// stabilizer state -> matching plan -> derandomized Gaussian state.
/// `regime` defaults to auto_regime(h).
Solution approximate(const Hamiltonian& h, std::optional<Regime> regime = std::nullopt);

/// Report on one solution. Oracle fields are present when the mode count is
/// within the dense cap.
struct GuaranteeReport {
  std::size_t modes = 0;
  std::size_t num_terms = 0;
  Regime regime = Regime::general;
  double m = 0.0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t max_degree = 0;
  std::size_t degree_bound = 0;
  std::size_t num_colors = 0;
  std::size_t denominator = 1;  // Q
  double bound = 0.0;           // m / Q
  double certified_energy = 0.0;
  double gaussian_energy = 0.0;
  double ratio_vs_bound = 0.0;  // certified_energy / (m / Q)
  std::optional<double> lambda_max;
  std::optional<double> ratio_vs_opt;  // certified_energy / lambda_max
  std::optional<double> dense_stabilizer_energy;
  std::optional<double> dense_gaussian_energy;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr double kEnergyTolerance = 1e-10;
inline constexpr double kBoundTolerance = 1e-9;

/// Recomputes every claim of `sol` from h alone and records each failed
/// check in `violations`. Never throws on a failed check.
GuaranteeReport audit(const Hamiltonian& h, const Solution& sol, std::size_t oracle_cap);

/// audit(), then throws GuaranteeViolation (message = text report) if any
/// check failed.
GuaranteeReport verify(const Hamiltonian& h, const Solution& sol, std::size_t oracle_cap);

std::string format_report_text(const GuaranteeReport& r);

// One `key=value` per line. Keys: modes terms regime m k q max_degree
// degree_bound num_colors Q bound certified_energy gaussian_energy
// ratio_vs_bound lambda_max ratio_vs_opt dense_stabilizer_energy
// dense_gaussian_energy violations status. Absent oracle values are "na".
std::string format_report_kv(const GuaranteeReport& r);

}  // namespace fermapprox
