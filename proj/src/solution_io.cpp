#include "fermapprox/solution_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"

namespace fermapprox {

std::string serialize_solution(const Solution& sol, const Hamiltonian& h) {
  std::ostringstream os;
  os << "fermapprox-solution 1\n"
     << "instance " << instance_hash(h) << "\n"
     << "modes " << h.modes() << "\n"
     << "regime " << to_string(sol.regime) << "\n"
     << "max_degree " << sol.max_degree << "\n"
     << "num_colors " << sol.num_colors << "\n"
     << "Q " << sol.denominator << "\n"
     << "certified_energy " << format_double(sol.stabilizer.certified_energy) << "\n"
     << "gaussian_energy " << format_double(sol.gaussian.energy) << "\n"
     << "selected " << sol.stabilizer.generators.size() << "\n";
  for (const auto& g : sol.stabilizer.generators) {
    os << "select";
    for (auto j : h.terms()[g.term].support) os << " " << (j + 1);
    os << " " << (g.sign < 0 ? "-1" : "+1") << "\n";
  }
  const auto& plan = sol.gaussian.plan;
  os << "pairs " << plan.num_pairs() << "\n";
  for (std::size_t p = 0; p < plan.num_pairs(); ++p) {
    const auto& pr = plan.pairs[p];
    os << "pair " << (pr.first + 1) << " " << (pr.second + 1) << " " << (pr.owner + 1) << " "
       << (sol.gaussian.z[p] < 0 ? "-1" : "+1") << "\n";
  }
  const auto& cov = sol.gaussian.covariance;
  os << "covariance " << cov.dim << "\n";
  for (std::size_t r = 0; r < cov.dim; ++r) {
    for (std::size_t c = 0; c < cov.dim; ++c) os << (c ? " " : "") << cov.at(r, c);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line split on whitespace; empty at end of input.
  std::vector<std::string> next() {
    while (pos_ < text_.size()) {
      auto nl = text_.find('\n', pos_);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string line(text_.substr(pos_, nl - pos_));
      pos_ = nl + 1;
      ++line_no_;
      std::istringstream is(line);
      std::vector<std::string> toks;
      for (std::string t; is >> t;) toks.push_back(t);
      if (!toks.empty()) return toks;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("solution line " + std::to_string(line_no_) + ": " + msg);
  }

  std::vector<std::string> expect(const std::string& key, std::size_t min_tokens) {
    auto toks = next();
    if (toks.empty()) fail("unexpected end of input, expected '" + key + "'");
    if (toks[0] != key) fail("expected '" + key + "', got '" + toks[0] + "'");
    if (toks.size() < min_tokens) fail("too few fields for '" + key + "'");
    return toks;
  }

  long long integer(const std::string& tok) const {
    long long v = 0;
    const char* b = tok.data();
    if (!tok.empty() && tok[0] == '+') ++b;
    auto [p, ec] = std::from_chars(b, tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("invalid integer '" + tok + "'");
    return v;
  }

  double real(const std::string& tok) const {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v)) fail("invalid number '" + tok + "'");
    return v;
  }

  int sign(const std::string& tok) const {
    auto v = integer(tok);
    if (v != 1 && v != -1) fail("expected +1 or -1, got '" + tok + "'");
    return static_cast<int>(v);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

Solution parse_solution(std::string_view text, const Hamiltonian& h) {
  LineReader in(text);
  Solution sol;

  auto header = in.expect("fermapprox-solution", 2);
  if (header[1] != "1") in.fail("unsupported solution version " + header[1]);
  auto hash = in.expect("instance", 2);
  if (hash[1] != instance_hash(h)) in.fail("instance hash mismatch: solution was written for a different instance");
  if (static_cast<std::size_t>(in.integer(in.expect("modes", 2)[1])) != h.modes()) in.fail("mode count mismatch");
  auto regime = parse_regime(in.expect("regime", 2)[1]);
  if (!regime) in.fail("unknown regime");
  sol.regime = *regime;
  sol.max_degree = static_cast<std::size_t>(in.integer(in.expect("max_degree", 2)[1]));
  sol.num_colors = static_cast<std::size_t>(in.integer(in.expect("num_colors", 2)[1]));
  sol.denominator = static_cast<std::size_t>(in.integer(in.expect("Q", 2)[1]));
  sol.stabilizer.certified_energy = in.real(in.expect("certified_energy", 2)[1]);
  sol.gaussian.energy = in.real(in.expect("gaussian_energy", 2)[1]);
  sol.stabilizer.modes = h.modes();

  const auto nsel = in.integer(in.expect("selected", 2)[1]);
  if (nsel < 0) in.fail("negative count");
  for (long long s = 0; s < nsel; ++s) {
    auto toks = in.expect("select", 4);
    Support sup;
    for (std::size_t a = 1; a + 1 < toks.size(); ++a) {
      auto j = in.integer(toks[a]);
      if (j < 1 || j > static_cast<long long>(h.num_majoranas())) in.fail("index out of range");
      sup.push_back(static_cast<MajoranaIndex>(j - 1));
    }
    const auto pos = h.find(sup);
    if (pos == Hamiltonian::npos) in.fail("selected support is not a term of the instance");
    const int sign = in.sign(toks.back());
    sol.selection.terms.push_back(pos);
    sol.selection.weight += std::abs(h.terms()[pos].coefficient);
    sol.stabilizer.generators.push_back({pos, sign});
  }

  auto& plan = sol.gaussian.plan;
  plan.modes = h.modes();
  for (const auto& g : sol.stabilizer.generators) {
    plan.selected_terms.push_back(g.term);
    plan.selected_signs.push_back(g.sign);
  }
  const auto npairs = in.integer(in.expect("pairs", 2)[1]);
  if (npairs != static_cast<long long>(h.modes())) in.fail("expected one pair per mode");
  plan.pair_of.assign(h.num_majoranas(), 0);
  plan.groups.assign(plan.selected_terms.size(), {});
  std::vector<char> seen(h.num_majoranas(), 0);
  for (long long p = 0; p < npairs; ++p) {
    auto toks = in.expect("pair", 5);
    const auto g = in.integer(toks[1]), hh = in.integer(toks[2]), owner = in.integer(toks[3]);
    const auto lim = static_cast<long long>(h.num_majoranas());
    if (g < 1 || hh < 1 || g > lim || hh > lim || g >= hh) in.fail("invalid pair");
    if (owner < 0 || owner > static_cast<long long>(plan.selected_terms.size())) in.fail("invalid pair owner");
    if (seen[g - 1]++ || seen[hh - 1]++) in.fail("generator matched twice");
    const auto pos = plan.pairs.size();
    plan.pairs.push_back({static_cast<MajoranaIndex>(g - 1), static_cast<MajoranaIndex>(hh - 1), owner - 1});
    plan.pair_of[g - 1] = plan.pair_of[hh - 1] = pos;
    if (owner > 0) plan.groups[static_cast<std::size_t>(owner - 1)].push_back(pos);
    sol.gaussian.z.push_back(static_cast<std::int8_t>(in.sign(toks[4])));
  }
  for (std::size_t s = 0; s < plan.groups.size(); ++s)
    if (plan.groups[s].empty()) in.fail("selected term has no matched pairs");
  // Parities are a function of the supports; take them from the induced plan
  // when it is well formed so that audit() compares the pairing itself.
  try {
    const auto induced = build_matching_plan(sol.stabilizer, h);
    plan.parity = induced.parity;
    plan.target = induced.target;
  } catch (const std::exception&) {
    plan.parity.assign(plan.groups.size(), 1);
    plan.target.assign(plan.groups.size(), 1);
  }

  auto& cov = sol.gaussian.covariance;
  cov.dim = static_cast<std::size_t>(in.integer(in.expect("covariance", 2)[1]));
  if (cov.dim != h.num_majoranas()) in.fail("covariance dimension mismatch");
  for (std::size_t r = 0; r < cov.dim; ++r) {
    auto toks = in.next();
    if (toks.size() != cov.dim) in.fail("covariance row has wrong length");
    for (const auto& t : toks) cov.entries.push_back(static_cast<int>(in.integer(t)));
  }
  in.expect("end", 1);
  if (!in.next().empty()) in.fail("trailing content after 'end'");
  return sol;
}

}  // namespace fermapprox
