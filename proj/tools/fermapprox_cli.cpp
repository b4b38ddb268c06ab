// Command-line front end: gen, approx, oracle, verify, report.
//
// Exit codes: 0 success, 1 usage, 2 validation, 3 guarantee violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermapprox/dense.hpp"
#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"
#include "fermapprox/instances.hpp"
#include "fermapprox/pipeline.hpp"
#include "fermapprox/solution_io.hpp"

namespace fa = fermapprox;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kViolation = 3 };

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fa::ValidationError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fa::ValidationError("cannot write '" + path + "'");
  out << text;
}

std::optional<fa::Regime> regime_flag(const std::string& s) {
  if (s == "auto") return std::nullopt;
  auto r = fa::parse_regime(s);
  if (!r) throw fa::ValidationError("unknown regime '" + s + "'");
  return r;
}

std::string report_string(const fa::GuaranteeReport& r, const std::string& format) {
  return format == "kv" ? fa::format_report_kv(r) : fa::format_report_text(r);
}

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::string kind = "mixed24";
  fa::GeneratorSpec spec;
  std::string output;
};

struct ApproxOptions {
  std::string input;
  std::string output;
  std::string graph_output;
  std::string regime = "auto";
  std::string format = "text";
};

struct OracleOptions {
  std::string input;
  std::size_t cap = fa::dense::kDefaultModeCap;
  std::string format = "text";
  bool cross_check = false;
};

struct VerifyOptions {
  std::string input;
  std::string solution;
  std::size_t cap = fa::dense::kDefaultModeCap;
  std::string format = "text";
};

struct ReportOptions {
  std::string input;
  std::string regime = "auto";
  std::size_t cap = fa::dense::kDefaultModeCap;
  std::string format = "text";
};

int run_gen(const GenOptions& o) {
  fa::Hamiltonian h;
  if (!o.family.empty()) {
    if (o.family != "optimality") throw fa::ValidationError("unknown family '" + o.family + "'");
    h = fa::optimality_family(o.n);
  } else {
    auto spec = o.spec;
    if (o.kind == "strictq")
      spec.kind = fa::InstanceKind::strict_q;
    else if (o.kind == "mixed24")
      spec.kind = fa::InstanceKind::mixed_2_4;
    else if (o.kind == "general")
      spec.kind = fa::InstanceKind::general;
    else
      throw fa::ValidationError("unknown kind '" + o.kind + "'");
    h = fa::random_instance(spec);
  }
  write_output(o.output, fa::serialize_instance(h));
  return kOk;
}

int run_approx(const ApproxOptions& o) {
  const auto h = fa::parse_instance(read_file(o.input));
  const auto sol = fa::approximate(h, regime_flag(o.regime));
  if (!o.output.empty()) write_output(o.output, fa::serialize_solution(sol, h));
  if (!o.graph_output.empty()) write_output(o.graph_output, fa::build_conflict_graph(h, sol.regime).edge_list());

  const double bound = h.total_weight() / static_cast<double>(sol.denominator);
  std::ostringstream os;
  if (o.format == "kv") {
    os << "regime=" << fa::to_string(sol.regime) << "\n"
       << "m=" << fa::format_double(h.total_weight()) << "\n"
       << "k=" << h.sparsity() << "\n"
       << "q=" << h.max_locality() << "\n"
       << "Q=" << sol.denominator << "\n"
       << "bound=" << fa::format_double(bound) << "\n"
       << "num_colors=" << sol.num_colors << "\n"
       << "certified_energy=" << fa::format_double(sol.stabilizer.certified_energy) << "\n"
       << "gaussian_energy=" << fa::format_double(sol.gaussian.energy) << "\n";
  } else {
    os << "regime           " << fa::to_string(sol.regime) << "\n"
       << "m                " << fa::format_double(h.total_weight()) << "\n"
       << "Q                " << sol.denominator << "\n"
       << "m/Q              " << fa::format_double(bound) << "\n"
       << "colors           " << sol.num_colors << "\n"
       << "certified energy " << fa::format_double(sol.stabilizer.certified_energy) << "\n"
       << "Gaussian energy  " << fa::format_double(sol.gaussian.energy) << "\n";
  }
  // Keep stdout clean for the solution when it goes there.
  (o.output == "-" ? std::cerr : std::cout) << os.str();
  return kOk;
}

int run_oracle(const OracleOptions& o) {
  const auto h = fa::parse_instance(read_file(o.input));
  const auto H = fa::dense::realize_hamiltonian(h, o.cap);
  const double lmax = fa::dense::lambda_max(H);
  std::optional<fa::dense::PowerIterationResult> pi;
  if (o.cross_check) pi = fa::dense::power_iteration_lambda_max(H);
  if (o.format == "kv") {
    std::cout << "lambda_max=" << fa::format_double(lmax) << "\n";
    if (pi) std::cout << "power_iteration=" << fa::format_double(pi->value) << "\n";
  } else {
    std::cout << "lambda_max " << fa::format_double(lmax) << "\n";
    if (pi) std::cout << "power iteration " << fa::format_double(pi->value) << " (" << pi->iterations << " iterations)\n";
  }
  if (pi && std::abs(pi->value - lmax) > 1e-8) {
    std::cerr << "eigensolver and power iteration disagree\n";
    return kViolation;
  }
  return kOk;
}

int run_verify(const VerifyOptions& o) {
  const auto h = fa::parse_instance(read_file(o.input));
  const auto sol = fa::parse_solution(read_file(o.solution), h);
  const auto r = fa::audit(h, sol, o.cap);
  std::cout << report_string(r, o.format);
  return r.ok() ? kOk : kViolation;
}

int run_report(const ReportOptions& o) {
  const auto h = fa::parse_instance(read_file(o.input));
  const auto sol = fa::approximate(h, regime_flag(o.regime));
  const auto r = fa::audit(h, sol, o.cap);
  std::cout << report_string(r, o.format);
  return r.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate the top eigenvalue of sparse Majorana Hamiltonians with certified states"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "kv"};
  const std::vector<std::string> regimes{"auto", "mixed24", "strictq", "general"};

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance file");
  g->add_option("--family", gen.family, "Named family (optimality)");
  g->add_option("--n", gen.n, "Family size");
  g->add_option("--kind", gen.kind, "Random kind")->check(CLI::IsMember({"strictq", "mixed24", "general"}));
  g->add_option("--modes", gen.spec.modes, "Mode count");
  g->add_option("--q", gen.spec.q, "Term size for strictq");
  g->add_option("--sizes", gen.spec.sizes, "Term sizes for general")->delimiter(',');
  g->add_option("--k", gen.spec.sparsity, "Sparsity limit");
  g->add_option("--terms", gen.spec.num_terms, "Number of terms");
  g->add_option("--min-abs", gen.spec.min_abs, "Smallest |coefficient|");
  g->add_option("--max-abs", gen.spec.max_abs, "Largest |coefficient|");
  g->add_option("--nesting", gen.spec.nesting_bias, "Probability of nested-support proposals");
  g->add_option("--seed", gen.spec.seed, "Random seed");
  g->add_option("--output", gen.output, "Output path (default stdout)");

  ApproxOptions ap;
  auto* a = app.add_subcommand("approx", "Run the approximation and write a solution file");
  a->add_option("--input", ap.input, "Instance file ('-' for stdin)")->required();
  a->add_option("--output", ap.output, "Solution file ('-' for stdout)");
  a->add_option("--graph", ap.graph_output, "Write the conflict graph edge list here");
  a->add_option("--regime", ap.regime)->check(CLI::IsMember(regimes));
  a->add_option("--format", ap.format)->check(CLI::IsMember(formats));

  OracleOptions orc;
  auto* oc = app.add_subcommand("oracle", "Exact largest eigenvalue for small instances");
  oc->add_option("--input", orc.input, "Instance file")->required();
  oc->add_option("--oracle-cap", orc.cap, "Largest mode count to realize densely");
  oc->add_option("--format", orc.format)->check(CLI::IsMember(formats));
  oc->add_flag("--power-check", orc.cross_check, "Cross-check with power iteration");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Re-derive and check every guarantee of a solution");
  v->add_option("--input", ver.input, "Instance file")->required();
  v->add_option("--solution", ver.solution, "Solution file")->required();
  v->add_option("--oracle-cap", ver.cap, "Largest mode count for dense checks");
  v->add_option("--format", ver.format)->check(CLI::IsMember(formats));

  ReportOptions rep;
  auto* r = app.add_subcommand("report", "approx followed by verify, without files");
  r->add_option("--input", rep.input, "Instance file")->required();
  r->add_option("--regime", rep.regime)->check(CLI::IsMember(regimes));
  r->add_option("--oracle-cap", rep.cap, "Largest mode count for dense checks");
  r->add_option("--format", rep.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*a) return run_approx(ap);
    if (*oc) return run_oracle(orc);
    if (*v) return run_verify(ver);
    if (*r) return run_report(rep);
  } catch (const fa::GuaranteeViolation& e) {
    std::cerr << "guarantee violation: " << e.what() << "\n";
    return kViolation;
  } catch (const fa::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const fa::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
