#include "fermapprox/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "fermapprox/errors.hpp"

namespace fermapprox {

Hamiltonian optimality_family(std::size_t n) {
  if (n == 0) throw ValidationError("optimality_family: n must be at least 1");
  std::vector<Term> terms;
  terms.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = n; b < 2 * n; ++b)
      terms.push_back({{static_cast<MajoranaIndex>(a), static_cast<MajoranaIndex>(b)}, 1.0});
  return analyze(std::move(terms), n);
}

namespace {

// Distribution mappings written out so that a seed yields the same instance
// with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

 private:
  std::mt19937_64 eng_;
};

class Builder {
 public:
  Builder(const GeneratorSpec& spec, Rng& rng)
      : spec_(spec), rng_(rng), occupancy_(2 * spec.modes, 0) {}

  bool try_add(Support sup) {
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) return false;
    if (!allowed_size(sup.size()) || supports_.count(sup)) return false;
    for (auto j : sup)
      if (occupancy_[j] >= spec_.sparsity) return false;
    for (auto j : sup) ++occupancy_[j];
    supports_.insert(sup);
    order_.push_back(std::move(sup));
    return true;
  }

  Support random_support(std::size_t size) {
    std::vector<MajoranaIndex> open;
    for (std::size_t j = 0; j < occupancy_.size(); ++j)
      if (occupancy_[j] < spec_.sparsity) open.push_back(static_cast<MajoranaIndex>(j));
    if (open.size() < size) return {};
    // Partial Fisher-Yates.
    for (std::size_t t = 0; t < size; ++t) std::swap(open[t], open[t + rng_.below(open.size() - t)]);
    return Support(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(size));
  }

  // A proper even-size subset of an existing term, or the union of two
  // disjoint existing terms.
  Support nested_support() {
    if (order_.empty()) return {};
    const auto& base = order_[rng_.below(order_.size())];
    if (rng_.uniform() < 0.5 && base.size() > 2) {
      std::vector<std::size_t> smaller;
      for (auto s : sizes())
        if (s < base.size()) smaller.push_back(s);
      if (smaller.empty()) return {};
      const auto size = smaller[rng_.below(smaller.size())];
      Support pick = base;
      for (std::size_t t = 0; t < size; ++t) std::swap(pick[t], pick[t + rng_.below(pick.size() - t)]);
      pick.resize(size);
      return pick;
    }
    const auto& other = order_[rng_.below(order_.size())];
    Support u = base;
    u.insert(u.end(), other.begin(), other.end());
    return u;
  }

  std::vector<std::size_t> sizes() const {
    switch (spec_.kind) {
      case InstanceKind::strict_q: return {spec_.q};
      case InstanceKind::mixed_2_4: return {2, 4};
      case InstanceKind::general: return spec_.sizes;
    }
    return {};
  }

  std::size_t count() const { return order_.size(); }
  const std::vector<Support>& supports() const { return order_; }

 private:
  bool allowed_size(std::size_t s) const {
    auto sz = sizes();
    return std::find(sz.begin(), sz.end(), s) != sz.end();
  }

  const GeneratorSpec& spec_;
  Rng& rng_;
  std::vector<std::size_t> occupancy_;
  std::set<Support> supports_;
  std::vector<Support> order_;
};

void validate(const GeneratorSpec& spec) {
  if (spec.modes == 0) throw ValidationError("generator: modes must be at least 1");
  if (spec.sparsity == 0) throw ValidationError("generator: sparsity must be at least 1");
  if (!(spec.min_abs > 0.0) || spec.max_abs < spec.min_abs)
    throw ValidationError("generator: coefficient range must satisfy 0 < min <= max");
  std::vector<std::size_t> sizes;
  switch (spec.kind) {
    case InstanceKind::strict_q: sizes = {spec.q}; break;
    case InstanceKind::mixed_2_4: sizes = {2, 4}; break;
    case InstanceKind::general: sizes = spec.sizes; break;
  }
  if (sizes.empty()) throw ValidationError("generator: no term sizes");
  for (auto s : sizes)
    if (s == 0 || s % 2 != 0 || s > 2 * spec.modes)
      throw ValidationError("generator: term size " + std::to_string(s) + " is not even or exceeds 2n");
  const auto smallest = *std::min_element(sizes.begin(), sizes.end());
  // Each term occupies at least `smallest` of the 2n*k generator slots.
  if (spec.num_terms * smallest > 2 * spec.modes * spec.sparsity)
    throw ValidationError("generator: " + std::to_string(spec.num_terms) + " terms cannot fit within sparsity " +
                          std::to_string(spec.sparsity) + " on " + std::to_string(2 * spec.modes) + " generators");
}

}  // namespace

Hamiltonian random_instance(const GeneratorSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  Builder b(spec, rng);
  const auto sizes = b.sizes();
  const bool nest = spec.kind != InstanceKind::strict_q;

  const std::size_t max_attempts = 200 * (spec.num_terms + 1) + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && b.count() < spec.num_terms; ++attempt) {
    Support sup;
    if (nest && rng.uniform() < spec.nesting_bias) sup = b.nested_support();
    if (sup.empty()) {
      // Start from a random size and fall back to the others when too few
      // generators remain open.
      const auto first = rng.below(sizes.size());
      for (std::size_t t = 0; t < sizes.size() && sup.empty(); ++t)
        sup = b.random_support(sizes[(first + t) % sizes.size()]);
    }
    if (!sup.empty()) b.try_add(std::move(sup));
  }
  if (b.count() < spec.num_terms)
    throw ValidationError("generator: reached only " + std::to_string(b.count()) + " of " +
                          std::to_string(spec.num_terms) + " terms under the sparsity limit");

  std::vector<Term> terms;
  for (const auto& sup : b.supports()) {
    double mag = spec.min_abs + (spec.max_abs - spec.min_abs) * rng.uniform();
    mag = std::round(mag * 1e6) / 1e6;
    if (mag <= 0.0) mag = spec.min_abs;
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    terms.push_back({sup, sign * mag});
  }
  return analyze(std::move(terms), spec.modes);
}

}  // namespace fermapprox
