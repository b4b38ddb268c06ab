#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fermapprox {

/// Exact element of {+1, +i, -1, -i}, stored as the exponent of i.
class Phase {
 public:
  constexpr Phase() = default;

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }
  static constexpr Phase from_exponent(int e) { return Phase(static_cast<std::uint8_t>(((e % 4) + 4) % 4)); }
  static constexpr Phase from_sign(int s) { return s >= 0 ? one() : minus_one(); }

  constexpr int exponent() const { return exp_; }
  constexpr bool is_real() const { return (exp_ & 1) == 0; }
  // +1 or -1; only meaningful when is_real().
  constexpr int real_sign() const { return exp_ == 0 ? 1 : -1; }

  constexpr Phase operator*(Phase o) const { return Phase((exp_ + o.exp_) & 3); }
  constexpr Phase& operator*=(Phase o) { return *this = *this * o; }
  constexpr Phase conj() const { return Phase((4 - exp_) & 3); }

  constexpr bool operator==(const Phase&) const = default;

  std::string str() const;

 private:
  constexpr explicit Phase(std::uint8_t e) : exp_(e) {}
  std::uint8_t exp_ = 0;
};

// 0-based Majorana generator index. Externally (files, CLI, python) indices
// are 1-based; conversion happens only at parse/serialize boundaries.
using MajoranaIndex = std::uint16_t;
using Support = std::vector<MajoranaIndex>;

/// Hermitizing prefactor for an ordered product of q distinct generators:
/// +i when q = 2 (mod 4), +1 when q = 0 (mod 4). Odd q is rejected.
Phase hermitize_phase(std::size_t q);

/// phase * c_{j1} c_{j2} ... with j1 < j2 < ... (normal form).
class MajoranaMonomial {
 public:
  MajoranaMonomial() = default;
  // Throws ValidationError unless indices are strictly increasing.
  MajoranaMonomial(Support indices, Phase phase = Phase::one());

  static MajoranaMonomial identity() { return {}; }
  static MajoranaMonomial generator(MajoranaIndex j) { return MajoranaMonomial({j}); }
  // hermitize_phase(|support|) * prod c_j, the operator c^Gamma of a term.
  static MajoranaMonomial term_operator(const Support& support);

  const Support& indices() const { return indices_; }
  Phase phase() const { return phase_; }
  std::size_t degree() const { return indices_.size(); }
  bool is_scalar() const { return indices_.empty(); }

  bool operator==(const MajoranaMonomial&) const = default;

  std::string str() const;

 private:
  Support indices_;
  Phase phase_;
};

/// Normal-form product a*b. Sign from the number of transpositions needed to
/// sort the concatenation, repeated generators cancel via c_j^2 = I.
MajoranaMonomial multiply_monomials(const MajoranaMonomial& a, const MajoranaMonomial& b);

MajoranaMonomial operator*(const MajoranaMonomial& a, const MajoranaMonomial& b);

bool commutes(const MajoranaMonomial& a, const MajoranaMonomial& b);

}  // namespace fermapprox
