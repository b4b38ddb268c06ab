#include "fermapprox/monomial.hpp"

#include <sstream>

#include "fermapprox/errors.hpp"

namespace fermapprox {

std::string Phase::str() const {
  switch (exp_) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

Phase hermitize_phase(std::size_t q) {
  if (q % 2 != 0) throw ValidationError("hermitize_phase: odd term size " + std::to_string(q));
  // (c_1...c_q)^dagger = (-1)^{q(q-1)/2} c_1...c_q
  return ((q * (q - 1) / 2) % 2 == 1) ? Phase::i() : Phase::one();
}

MajoranaMonomial::MajoranaMonomial(Support indices, Phase phase)
    : indices_(std::move(indices)), phase_(phase) {
  for (std::size_t t = 1; t < indices_.size(); ++t) {
    if (indices_[t - 1] >= indices_[t])
      throw ValidationError("monomial indices must be strictly increasing");
  }
}

MajoranaMonomial MajoranaMonomial::term_operator(const Support& support) {
  return MajoranaMonomial(support, hermitize_phase(support.size()));
}

std::string MajoranaMonomial::str() const {
  std::ostringstream os;
  os << phase_.str();
  if (indices_.empty()) os << " I";
  for (auto j : indices_) os << " c" << (j + 1);
  return os.str();
}

MajoranaMonomial multiply_monomials(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  const auto& x = a.indices();
  const auto& y = b.indices();
  Support out;
  out.reserve(x.size() + y.size());

  // Merging two sorted runs: every element of x that must move past an
  // element of y is one transposition. Equal indices meet adjacently and
  // annihilate (c_j c_j = I) with no extra sign.
  std::size_t swaps = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      out.push_back(x[i++]);
    } else if (y[j] < x[i]) {
      swaps += x.size() - i;
      out.push_back(y[j++]);
    } else {
      // y[j] passes the x.size()-i-1 elements after x[i], then cancels.
      swaps += x.size() - i - 1;
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());

  Phase phase = a.phase() * b.phase();
  if (swaps % 2 == 1) phase *= Phase::minus_one();
  return MajoranaMonomial(std::move(out), phase);
}

MajoranaMonomial operator*(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  return multiply_monomials(a, b);
}

bool commutes(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  return multiply_monomials(a, b) == multiply_monomials(b, a);
}

}  // namespace fermapprox
