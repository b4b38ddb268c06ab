#include "fermapprox/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermapprox/errors.hpp"

namespace fermapprox {

std::string_view to_string(LocalityClass c) {
  switch (c) {
    case LocalityClass::strict_q: return "strict-q";
    case LocalityClass::mixed_2_4: return "mixed-2-4";
    case LocalityClass::general: return "general";
  }
  return "?";
}

namespace {

std::string describe(const Support& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(s[t] + 1);
  }
  return out + "}";
}

}  // namespace

Hamiltonian analyze(std::vector<Term> terms, std::size_t modes) {
  if (modes == 0) throw ValidationError("mode count must be at least 1");
  if (2 * modes > 65535) throw ValidationError("mode count too large");

  for (const auto& t : terms) {
    if (t.support.empty() || t.support.size() % 2 != 0)
      throw ValidationError("term " + describe(t.support) + ": support size must be even and nonzero");
    for (std::size_t j = 1; j < t.support.size(); ++j) {
      if (t.support[j - 1] == t.support[j])
        throw ValidationError("term " + describe(t.support) + ": duplicate index");
      if (t.support[j - 1] > t.support[j])
        throw ValidationError("term " + describe(t.support) + ": indices must be strictly increasing");
    }
    if (t.support.back() >= 2 * modes)
      throw ValidationError("term " + describe(t.support) + ": index out of range for " +
                            std::to_string(modes) + " modes");
    if (t.coefficient == 0.0 || !std::isfinite(t.coefficient))
      throw ValidationError("term " + describe(t.support) + ": coefficient must be finite and nonzero");
  }

  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.support < b.support; });
  for (std::size_t t = 1; t < terms.size(); ++t) {
    if (terms[t - 1].support == terms[t].support)
      throw ValidationError("duplicate support " + describe(terms[t].support));
  }

  Hamiltonian h;
  h.modes_ = modes;
  h.terms_ = std::move(terms);
  h.incidence_.assign(2 * modes, {});

  bool has_other = false;
  std::size_t min_q = h.terms_.empty() ? 0 : h.terms_.front().support.size();
  for (std::size_t t = 0; t < h.terms_.size(); ++t) {
    const auto& term = h.terms_[t];
    for (auto j : term.support) h.incidence_[j].push_back(t);
    h.total_weight_ += std::abs(term.coefficient);
    h.max_locality_ = std::max(h.max_locality_, term.support.size());
    min_q = std::min(min_q, term.support.size());
    if (term.support.size() != 2 && term.support.size() != 4) has_other = true;
  }
  h.min_locality_ = min_q;
  for (const auto& inc : h.incidence_) h.sparsity_ = std::max(h.sparsity_, inc.size());

  if (h.min_locality_ == h.max_locality_)
    h.locality_class_ = LocalityClass::strict_q;
  else if (!has_other)
    h.locality_class_ = LocalityClass::mixed_2_4;
  else
    h.locality_class_ = LocalityClass::general;
  return h;
}

std::size_t Hamiltonian::find(const Support& support) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), support,
                             [](const Term& t, const Support& s) { return t.support < s; });
  if (it == terms_.end() || it->support != support) return npos;
  return static_cast<std::size_t>(it - terms_.begin());
}

}  // namespace fermapprox
