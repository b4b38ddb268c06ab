#include "fermapprox/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <vector>

#include "fermapprox/errors.hpp"

namespace fermapprox {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + msg);
}

std::optional<unsigned long> parse_uint(std::string_view tok) {
  unsigned long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view tok) {
  double v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

Hamiltonian parse_instance(std::string_view text) {
  std::optional<std::size_t> modes;
  std::vector<Term> terms;
  std::map<Support, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (toks[0] == "modes") {
      if (modes) fail(line_no, "duplicate modes header");
      if (toks.size() != 2) fail(line_no, "expected 'modes <n>'");
      auto n = parse_uint(toks[1]);
      if (!n || *n == 0 || *n > 32767) fail(line_no, "invalid mode count '" + std::string(toks[1]) + "'");
      modes = *n;
    } else if (toks[0] == "term") {
      if (toks.size() < 4) fail(line_no, "expected 'term <j1> ... <jq> <coefficient>'");
      Term t;
      for (std::size_t a = 1; a + 1 < toks.size(); ++a) {
        auto j = parse_uint(toks[a]);
        if (!j || *j == 0 || *j > 65535) fail(line_no, "invalid index '" + std::string(toks[a]) + "'");
        t.support.push_back(static_cast<MajoranaIndex>(*j - 1));
      }
      for (std::size_t a = 1; a < t.support.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b)
          if (t.support[a] == t.support[b]) fail(line_no, "duplicate index " + std::to_string(t.support[a] + 1));
      }
      for (std::size_t a = 1; a < t.support.size(); ++a)
        if (t.support[a - 1] > t.support[a]) fail(line_no, "indices must be strictly increasing");
      if (t.support.size() % 2 != 0) fail(line_no, "odd term size " + std::to_string(t.support.size()));
      auto c = parse_real(toks.back());
      if (!c) fail(line_no, "invalid coefficient '" + std::string(toks.back()) + "'");
      if (*c == 0.0) fail(line_no, "zero coefficient");
      if (!modes) fail(line_no, "term before modes header");
      if (t.support.back() >= 2 * *modes)
        fail(line_no, "index " + std::to_string(t.support.back() + 1) + " out of range for " +
                          std::to_string(*modes) + " modes");
      auto [it, fresh] = seen.emplace(t.support, line_no);
      if (!fresh) fail(line_no, "duplicate support (first defined on line " + std::to_string(it->second) + ")");
      t.coefficient = *c;
      terms.push_back(std::move(t));
    } else {
      fail(line_no, "unknown directive '" + std::string(toks[0]) + "'");
    }
  }
  if (!modes) throw ValidationError("missing modes header");
  return analyze(std::move(terms), *modes);
}

std::string format_double(double value) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, p);
}

std::string serialize_instance(const Hamiltonian& h) {
  std::string out = "modes " + std::to_string(h.modes()) + "\n";
  for (const auto& t : h.terms()) {
    out += "term";
    for (auto j : t.support) out += " " + std::to_string(j + 1);
    out += " " + format_double(t.coefficient) + "\n";
  }
  return out;
}

std::string instance_hash(const Hamiltonian& h) {
  std::uint64_t x = 1469598103934665603ULL;
  for (unsigned char c : serialize_instance(h)) {
    x ^= c;
    x *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace fermapprox
