// Python bindings. Generator labels are 1-based on this side, as in files.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermapprox/dense.hpp"
#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"
#include "fermapprox/instances.hpp"
#include "fermapprox/monomial.hpp"
#include "fermapprox/pipeline.hpp"
#include "fermapprox/solution_io.hpp"

namespace py = pybind11;
namespace fa = fermapprox;

namespace {

using PyTerm = std::pair<std::vector<int>, double>;

fa::Support to_support(const std::vector<int>& one_based) {
  fa::Support s;
  for (int j : one_based) {
    if (j < 1 || j > 65535) throw fa::ValidationError("generator label " + std::to_string(j) + " out of range");
    s.push_back(static_cast<fa::MajoranaIndex>(j - 1));
  }
  return s;
}

std::vector<int> from_support(const fa::Support& s) {
  std::vector<int> out;
  for (auto j : s) out.push_back(j + 1);
  return out;
}

fa::Hamiltonian make_hamiltonian(std::size_t modes, const std::vector<PyTerm>& terms) {
  std::vector<fa::Term> ts;
  for (const auto& [sup, c] : terms) ts.push_back({to_support(sup), c});
  return fa::analyze(std::move(ts), modes);
}

std::optional<fa::Regime> regime_arg(const std::optional<std::string>& s) {
  if (!s || *s == "auto") return std::nullopt;
  auto r = fa::parse_regime(*s);
  if (!r) throw fa::ValidationError("unknown regime '" + *s + "'");
  return r;
}

fa::InstanceKind kind_arg(const std::string& s) {
  if (s == "strictq") return fa::InstanceKind::strict_q;
  if (s == "mixed24") return fa::InstanceKind::mixed_2_4;
  if (s == "general") return fa::InstanceKind::general;
  throw fa::ValidationError("unknown kind '" + s + "'");
}

py::dict report_dict(const fa::GuaranteeReport& r) {
  py::dict d;
  d["modes"] = r.modes;
  d["terms"] = r.num_terms;
  d["regime"] = std::string(fa::to_string(r.regime));
  d["m"] = r.m;
  d["k"] = r.k;
  d["q"] = r.q;
  d["max_degree"] = r.max_degree;
  d["degree_bound"] = r.degree_bound;
  d["num_colors"] = r.num_colors;
  d["Q"] = r.denominator;
  d["bound"] = r.bound;
  d["certified_energy"] = r.certified_energy;
  d["gaussian_energy"] = r.gaussian_energy;
  d["ratio_vs_bound"] = r.ratio_vs_bound;
  d["lambda_max"] = r.lambda_max;
  d["ratio_vs_opt"] = r.ratio_vs_opt;
  d["dense_stabilizer_energy"] = r.dense_stabilizer_energy;
  d["dense_gaussian_energy"] = r.dense_gaussian_energy;
  d["violations"] = r.violations;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_fermapprox, m) {
  m.doc() = "Certified approximation of the top eigenvalue of sparse Majorana Hamiltonians";

  py::register_exception<fa::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<fa::GuaranteeViolation>(m, "GuaranteeViolation", PyExc_RuntimeError);
  py::register_exception<fa::CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<fa::Hamiltonian>(m, "Hamiltonian")
      .def(py::init(&make_hamiltonian), py::arg("modes"), py::arg("terms"),
           "Terms are (labels, coefficient) with 1-based labels.")
      .def_property_readonly("modes", &fa::Hamiltonian::modes)
      .def_property_readonly("sparsity", &fa::Hamiltonian::sparsity)
      .def_property_readonly("max_locality", &fa::Hamiltonian::max_locality)
      .def_property_readonly("total_weight", &fa::Hamiltonian::total_weight)
      .def_property_readonly("locality_class",
                             [](const fa::Hamiltonian& h) { return std::string(fa::to_string(h.locality_class())); })
      .def_property_readonly("terms",
                             [](const fa::Hamiltonian& h) {
                               std::vector<PyTerm> out;
                               for (const auto& t : h.terms()) out.emplace_back(from_support(t.support), t.coefficient);
                               return out;
                             })
      .def("__len__", &fa::Hamiltonian::size)
      .def("__eq__", [](const fa::Hamiltonian& a, const fa::Hamiltonian& b) { return a == b; })
      .def("serialize", &fa::serialize_instance)
      .def("hash", &fa::instance_hash);

  m.def("parse_instance", [](const std::string& text) { return fa::parse_instance(text); }, py::arg("text"));
  m.def("optimality_family", &fa::optimality_family, py::arg("n"));
  m.def(
      "random_instance",
      [](const std::string& kind, std::size_t modes, std::size_t k, std::size_t terms, std::uint64_t seed,
         std::size_t q, std::vector<std::size_t> sizes, double min_abs, double max_abs, double nesting) {
        fa::GeneratorSpec s;
        s.kind = kind_arg(kind);
        s.modes = modes;
        s.sparsity = k;
        s.num_terms = terms;
        s.seed = seed;
        s.q = q;
        s.sizes = std::move(sizes);
        s.min_abs = min_abs;
        s.max_abs = max_abs;
        s.nesting_bias = nesting;
        return fa::random_instance(s);
      },
      py::arg("kind") = "mixed24", py::arg("modes") = 4, py::arg("k") = 2, py::arg("terms") = 6,
      py::arg("seed") = 1, py::arg("q") = 4, py::arg("sizes") = std::vector<std::size_t>{2, 4, 6},
      py::arg("min_abs") = 0.1, py::arg("max_abs") = 1.0, py::arg("nesting") = 0.35);

  py::class_<fa::Solution>(m, "Solution")
      .def_property_readonly("regime", [](const fa::Solution& s) { return std::string(fa::to_string(s.regime)); })
      .def_readonly("max_degree", &fa::Solution::max_degree)
      .def_readonly("num_colors", &fa::Solution::num_colors)
      .def_readonly("Q", &fa::Solution::denominator)
      .def_property_readonly("certified_energy", [](const fa::Solution& s) { return s.stabilizer.certified_energy; })
      .def_property_readonly("gaussian_energy", [](const fa::Solution& s) { return s.gaussian.energy; })
      .def_property_readonly("selected_terms", [](const fa::Solution& s) { return s.selection.terms; })
      .def_property_readonly("pairs",
                             [](const fa::Solution& s) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (std::size_t p = 0; p < s.gaussian.plan.num_pairs(); ++p) {
                                 const auto& pr = s.gaussian.plan.pairs[p];
                                 out.emplace_back(pr.first + 1, pr.second + 1, s.gaussian.z[p]);
                               }
                               return out;
                             })
      .def_property_readonly("covariance",
                             [](const fa::Solution& s) {
                               const auto& c = s.gaussian.covariance;
                               std::vector<std::vector<int>> rows(c.dim);
                               for (std::size_t r = 0; r < c.dim; ++r)
                                 for (std::size_t col = 0; col < c.dim; ++col) rows[r].push_back(c.at(r, col));
                               return rows;
                             })
      .def_property_readonly("trajectory", [](const fa::Solution& s) { return s.gaussian.trajectory; });

  m.def("approximate", [](const fa::Hamiltonian& h, const std::optional<std::string>& regime) {
    return fa::approximate(h, regime_arg(regime));
  }, py::arg("h"), py::arg("regime") = py::none());
  m.def("serialize_solution", &fa::serialize_solution, py::arg("solution"), py::arg("h"));
  m.def("parse_solution", [](const std::string& text, const fa::Hamiltonian& h) { return fa::parse_solution(text, h); },
        py::arg("text"), py::arg("h"));
  m.def("audit", [](const fa::Hamiltonian& h, const fa::Solution& s, std::size_t cap) {
    return report_dict(fa::audit(h, s, cap));
  }, py::arg("h"), py::arg("solution"), py::arg("oracle_cap") = fa::dense::kDefaultModeCap);
  m.def("verify", [](const fa::Hamiltonian& h, const fa::Solution& s, std::size_t cap) {
    return report_dict(fa::verify(h, s, cap));
  }, py::arg("h"), py::arg("solution"), py::arg("oracle_cap") = fa::dense::kDefaultModeCap);
  m.def("lambda_max", [](const fa::Hamiltonian& h, std::size_t cap) {
    return fa::dense::lambda_max(fa::dense::realize_hamiltonian(h, cap));
  }, py::arg("h"), py::arg("oracle_cap") = fa::dense::kDefaultModeCap);

  m.def(
      "multiply_monomials",
      [](const std::vector<int>& a, const std::vector<int>& b, int phase_a, int phase_b) {
        const auto c = fa::multiply_monomials(fa::MajoranaMonomial(to_support(a), fa::Phase::from_exponent(phase_a)),
                                              fa::MajoranaMonomial(to_support(b), fa::Phase::from_exponent(phase_b)));
        return std::make_pair(c.phase().exponent(), from_support(c.indices()));
      },
      py::arg("a"), py::arg("b"), py::arg("phase_a") = 0, py::arg("phase_b") = 0,
      "Product of i^phase_a c^a and i^phase_b c^b; returns (phase exponent, labels).");
}
