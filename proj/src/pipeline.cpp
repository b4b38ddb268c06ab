#include "fermapprox/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "fermapprox/dense.hpp"
#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"

namespace fermapprox {

Solution approximate(const Hamiltonian& h, std::optional<Regime> regime) {
  Solution sol;
  sol.regime = regime.value_or(auto_regime(h));
  const auto graph = build_conflict_graph(h, sol.regime);
  const auto coloring = greedy_color(graph, h);
  sol.max_degree = graph.max_degree();
  sol.num_colors = coloring.num_colors;
  sol.denominator = approximation_denominator(sol.regime, h);
  sol.selection = heaviest_class(coloring, h);
  sol.stabilizer = build_stabilizer(sol.selection, h, graph);
  sol.gaussian = derandomize(build_matching_plan(sol.stabilizer, h), h);
  return sol;
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double x) { return format_double(x); }

}  // namespace

GuaranteeReport audit(const Hamiltonian& h, const Solution& sol, std::size_t oracle_cap) {
  GuaranteeReport r;
  auto fail = [&](std::string msg) { r.violations.push_back(std::move(msg)); };

  r.modes = h.modes();
  r.num_terms = h.size();
  r.regime = sol.regime;
  r.m = h.total_weight();
  r.k = h.sparsity();
  r.q = h.max_locality();
  r.degree_bound = degree_bound(sol.regime, h);
  r.denominator = approximation_denominator(sol.regime, h);
  r.bound = r.m / static_cast<double>(r.denominator);
  r.certified_energy = sol.stabilizer.certified_energy;
  r.gaussian_energy = sol.gaussian.energy;
  r.num_colors = sol.num_colors;
  r.max_degree = sol.max_degree;
  r.ratio_vs_bound = r.bound > 0.0 ? r.certified_energy / r.bound : 1.0;

  if (sol.denominator != r.denominator)
    fail("recorded Q " + std::to_string(sol.denominator) + " differs from " + std::to_string(r.denominator));

  std::optional<ConflictGraph> graph;
  try {
    graph.emplace(build_conflict_graph(h, sol.regime));
    if (graph->max_degree() != sol.max_degree) fail("recorded max degree does not match the conflict graph");
    r.max_degree = graph->max_degree();
  } catch (const std::exception& e) {
    fail(std::string("conflict graph: ") + e.what());
  }
  if (sol.num_colors > r.max_degree + 1) fail("coloring uses more than max_degree + 1 colors");

  // Selection and stabilizer.
  double weight = 0.0;
  bool selection_ok = true;
  for (auto t : sol.selection.terms) {
    if (t >= h.size()) {
      fail("selected term out of range");
      selection_ok = false;
      break;
    }
    weight += std::abs(h.terms()[t].coefficient);
  }
  const double etol = kEnergyTolerance * (1.0 + r.m);
  if (selection_ok) {
    if (!close(weight, r.certified_energy, etol)) fail("certified energy is not the selected weight");
    if (sol.stabilizer.generators.size() != sol.selection.terms.size()) {
      fail("stabilizer generators do not match the selection");
    } else {
      for (std::size_t s = 0; s < sol.selection.terms.size(); ++s) {
        const auto& g = sol.stabilizer.generators[s];
        const int sign = h.terms()[sol.selection.terms[s]].coefficient < 0 ? -1 : 1;
        if (g.term != sol.selection.terms[s] || g.sign != sign) fail("stabilizer generator " + std::to_string(s) + " is wrong");
      }
    }
    if (graph) {
      try {
        build_stabilizer(sol.selection, h, *graph);
      } catch (const std::exception& e) {
        fail(std::string("stabilizer: ") + e.what());
      }
    }
  }
  if (r.certified_energy < r.bound - kBoundTolerance) fail("certified energy " + fmt(r.certified_energy) + " < m/Q " + fmt(r.bound));
  if (sol.num_colors > 0 && r.certified_energy * static_cast<double>(sol.num_colors) < r.m - kBoundTolerance)
    fail("pigeonhole bound weight * colors >= m fails");

  // Gaussian state.
  const auto& gs = sol.gaussian;
  bool plan_ok = false;
  try {
    plan_ok = gs.plan == build_matching_plan(sol.stabilizer, h);
    if (!plan_ok) fail("matching plan differs from the one the selection induces");
  } catch (const std::exception& e) {
    fail(std::string("matching plan: ") + e.what());
  }
  if (plan_ok) {
    if (gs.z.size() != gs.plan.num_pairs() || !is_full(gs.z)) {
      fail("sign assignment is incomplete");
      plan_ok = false;
    } else if (!satisfies_constraints(gs.plan, gs.z)) {
      fail("sign assignment violates a parity constraint");
      plan_ok = false;
    }
  }
  if (plan_ok) {
    const double e = energy_of_z(gs.plan, gs.z, h);
    if (!close(e, gs.energy, etol)) fail("recorded Gaussian energy " + fmt(gs.energy) + " != closed form " + fmt(e));
    const auto cov = covariance_of(gs.plan, gs.z);
    if (cov.entries != gs.covariance.entries || cov.dim != gs.covariance.dim) fail("covariance does not match z");
    if (!gs.covariance.is_antisymmetric()) fail("covariance is not antisymmetric");
    if (!gs.covariance.squares_to_minus_identity()) fail("covariance does not square to -I");
  }
  if (gs.energy < r.certified_energy - etol)
    fail("Gaussian energy " + fmt(gs.energy) + " below certified energy " + fmt(r.certified_energy));

  if (h.modes() <= oracle_cap && plan_ok) {
    try {
      const auto H = dense::realize_hamiltonian(h, oracle_cap);
      r.lambda_max = dense::lambda_max(H);
      const auto rho = dense::realize_stabilizer(sol.stabilizer, h, oracle_cap);
      const auto rho_g = dense::realize_gaussian(gs.plan, gs.z, oracle_cap);
      r.dense_stabilizer_energy = dense::energy(h, rho, oracle_cap);
      r.dense_gaussian_energy = dense::energy(h, rho_g, oracle_cap);
      if (*r.lambda_max > 0.0) r.ratio_vs_opt = r.certified_energy / *r.lambda_max;

      for (const auto* state : {&rho, &rho_g}) {
        const char* name = state == &rho ? "stabilizer" : "Gaussian";
        const auto tr = state->trace();
        if (std::abs(tr - 1.0) > kEnergyTolerance) fail(std::string(name) + " state trace is not 1");
        const auto ev = dense::eigenvalues_hermitian(*state);
        if (ev.front() < -kEnergyTolerance) fail(std::string(name) + " state is not positive semidefinite");
      }
      if (!close(*r.dense_stabilizer_energy, r.certified_energy, etol))
        fail("dense Tr(H rho) " + fmt(*r.dense_stabilizer_energy) + " != certified " + fmt(r.certified_energy));
      if (!close(*r.dense_gaussian_energy, gs.energy, etol))
        fail("dense Tr(H rho') " + fmt(*r.dense_gaussian_energy) + " != Gaussian " + fmt(gs.energy));
      if (*r.lambda_max < r.certified_energy - kBoundTolerance) fail("lambda_max below certified energy");
      if (*r.lambda_max < gs.energy - kBoundTolerance) fail("lambda_max below Gaussian energy");
      if (*r.lambda_max > r.m + kBoundTolerance) fail("lambda_max exceeds m");
    } catch (const std::exception& e) {
      fail(std::string("dense oracle: ") + e.what());
    }
  }
  return r;
}

GuaranteeReport verify(const Hamiltonian& h, const Solution& sol, std::size_t oracle_cap) {
  auto r = audit(h, sol, oracle_cap);
  if (!r.ok()) throw GuaranteeViolation(format_report_text(r));
  return r;
}

std::string format_report_text(const GuaranteeReport& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("n/a"); };
  os << "instance         " << r.modes << " modes, " << r.num_terms << " terms\n"
     << "regime           " << to_string(r.regime) << "\n"
     << "k, q             " << r.k << ", " << r.q << "\n"
     << "m                " << format_double(r.m) << "\n"
     << "max degree       " << r.max_degree << " (bound " << r.degree_bound << ")\n"
     << "colors           " << r.num_colors << "\n"
     << "Q                " << r.denominator << "\n"
     << "m/Q              " << format_double(r.bound) << "\n"
     << "certified energy " << format_double(r.certified_energy) << "\n"
     << "Gaussian energy  " << format_double(r.gaussian_energy) << "\n"
     << "ratio vs bound   " << format_double(r.ratio_vs_bound) << "\n"
     << "lambda_max       " << opt(r.lambda_max) << "\n"
     << "ratio vs opt     " << opt(r.ratio_vs_opt) << "\n"
     << "dense Tr(H rho)  " << opt(r.dense_stabilizer_energy) << "\n"
     << "dense Tr(H rho') " << opt(r.dense_gaussian_energy) << "\n";
  if (r.ok()) {
    os << "status           ok\n";
  } else {
    os << "status           VIOLATION\n";
    for (const auto& v : r.violations) os << "  - " << v << "\n";
  }
  return os.str();
}

std::string format_report_kv(const GuaranteeReport& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("na"); };
  os << "modes=" << r.modes << "\n"
     << "terms=" << r.num_terms << "\n"
     << "regime=" << to_string(r.regime) << "\n"
     << "m=" << format_double(r.m) << "\n"
     << "k=" << r.k << "\n"
     << "q=" << r.q << "\n"
     << "max_degree=" << r.max_degree << "\n"
     << "degree_bound=" << r.degree_bound << "\n"
     << "num_colors=" << r.num_colors << "\n"
     << "Q=" << r.denominator << "\n"
     << "bound=" << format_double(r.bound) << "\n"
     << "certified_energy=" << format_double(r.certified_energy) << "\n"
     << "gaussian_energy=" << format_double(r.gaussian_energy) << "\n"
     << "ratio_vs_bound=" << format_double(r.ratio_vs_bound) << "\n"
     << "lambda_max=" << opt(r.lambda_max) << "\n"
     << "ratio_vs_opt=" << opt(r.ratio_vs_opt) << "\n"
     << "dense_stabilizer_energy=" << opt(r.dense_stabilizer_energy) << "\n"
     << "dense_gaussian_energy=" << opt(r.dense_gaussian_energy) << "\n"
     << "violations=" << r.violations.size() << "\n"
     << "status=" << (r.ok() ? "ok" : "violation") << "\n";
  return os.str();
}

}  // namespace fermapprox
