#include "fermapprox/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "fermapprox/errors.hpp"

namespace fermapprox::dense {

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw ValidationError("dimension mismatch");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += o.a_[t];
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw ValidationError("dimension mismatch");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= o.a_[t];
  return *this;
}

DenseOperator& DenseOperator::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw ValidationError("dimension mismatch");
  const std::size_t n = a.dim_;
  DenseOperator c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

cplx DenseOperator::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double DenseOperator::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return err;
}

double DenseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch");
  double m = 0.0;
  for (std::size_t t = 0; t < a.data().size(); ++t) m = std::max(m, std::abs(a.data()[t] - b.data()[t]));
  return m;
}

SignedPermutation SignedPermutation::identity(std::size_t dim) {
  SignedPermutation p;
  p.row_.resize(dim);
  p.value_.assign(dim, 1.0);
  for (std::size_t c = 0; c < dim; ++c) p.row_[c] = static_cast<std::uint32_t>(c);
  return p;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch");
  SignedPermutation c;
  c.row_.resize(b.dim());
  c.value_.resize(b.dim());
  for (std::size_t col = 0; col < b.dim(); ++col) {
    const auto mid = b.row_[col];
    c.row_[col] = a.row_[mid];
    c.value_[col] = a.value_[mid] * b.value_[col];
  }
  return c;
}

SignedPermutation& SignedPermutation::operator*=(cplx s) {
  for (auto& v : value_) v *= s;
  return *this;
}

DenseOperator SignedPermutation::to_dense() const {
  DenseOperator out(dim());
  for (std::size_t c = 0; c < dim(); ++c) out(row_[c], c) = value_[c];
  return out;
}

cplx SignedPermutation::trace_product(const DenseOperator& rho) const {
  cplx t{};
  for (std::size_t c = 0; c < dim(); ++c) t += value_[c] * rho(c, row_[c]);
  return t;
}

void SignedPermutation::right_multiply_one_plus(DenseOperator& rho, cplx s) const {
  const DenseOperator old = rho;
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rho(r, c) += s * old(r, row_[c]) * value_[c];
}

void check_cap(std::size_t modes, std::size_t cap) {
  if (modes > cap)
    throw CapExceeded("dense realization of " + std::to_string(modes) + " modes exceeds cap of " +
                      std::to_string(cap));
  if (modes > 20) throw CapExceeded("dense realization limited to 20 modes");
}

SignedPermutation jordan_wigner_sparse(MajoranaIndex i, std::size_t modes, std::size_t cap) {
  check_cap(modes, cap);
  if (i >= 2 * modes) throw ValidationError("Majorana index out of range");
  const std::size_t mode = i / 2;
  const bool is_y = (i % 2) == 1;
  const std::size_t dim = std::size_t{1} << modes;
  const std::size_t shift = modes - 1 - mode;
  const std::uint32_t flip = std::uint32_t{1} << shift;

  SignedPermutation p;
  p.row_.resize(dim);
  p.value_.resize(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    // Z string over the modes before `mode` (the high bits).
    const int zsign = (std::popcount(static_cast<std::uint32_t>(x >> (shift + 1))) % 2) ? -1 : 1;
    cplx v = zsign;
    if (is_y) v *= ((x & flip) == 0) ? cplx(0, 1) : cplx(0, -1);
    p.row_[x] = x ^ flip;
    p.value_[x] = v;
  }
  return p;
}

DenseOperator jordan_wigner(MajoranaIndex i, std::size_t modes, std::size_t cap) {
  return jordan_wigner_sparse(i, modes, cap).to_dense();
}

namespace {

cplx phase_value(Phase p) {
  switch (p.exponent()) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

SignedPermutation realize_monomial(const MajoranaMonomial& m, std::size_t modes, std::size_t cap) {
  check_cap(modes, cap);
  auto p = SignedPermutation::identity(std::size_t{1} << modes);
  for (auto j : m.indices()) p = p * jordan_wigner_sparse(j, modes, cap);
  p *= phase_value(m.phase());
  return p;
}

bool identify_monomial(const SignedPermutation& p, std::size_t modes, MajoranaMonomial& out, double tol) {
  const std::size_t dim = std::size_t{1} << modes;
  if (p.dim() != dim) return false;
  const std::uint32_t flips = p.row(0);
  // Each mode contributes nothing/both (no flip) or exactly one generator (flip).
  for (std::size_t choice = 0; choice < (std::size_t{1} << modes); ++choice) {
    Support sup;
    for (std::size_t mode = 0; mode < modes; ++mode) {
      const bool flipped = (flips >> (modes - 1 - mode)) & 1;
      const bool bit = (choice >> mode) & 1;
      const auto lo = static_cast<MajoranaIndex>(2 * mode);
      if (flipped) {
        sup.push_back(bit ? lo + 1 : lo);
      } else if (bit) {
        sup.push_back(lo);
        sup.push_back(lo + 1);
      }
    }
    const auto cand = realize_monomial(MajoranaMonomial(sup), modes, modes);
    const cplx ratio = p.value(0) / cand.value(0);
    const int e = static_cast<int>(std::lround(std::arg(ratio) / (std::numbers::pi / 2)));
    const Phase ph = Phase::from_exponent(e);
    const cplx pv = phase_value(ph);
    bool ok = std::abs(std::abs(ratio) - 1.0) <= tol;
    for (std::size_t c = 0; ok && c < dim; ++c)
      ok = cand.row(c) == p.row(c) && std::abs(p.value(c) - pv * cand.value(c)) <= tol;
    if (ok) {
      out = MajoranaMonomial(std::move(sup), ph);
      return true;
    }
  }
  return false;
}

DenseOperator realize_hamiltonian(const Hamiltonian& h, std::size_t cap) {
  check_cap(h.modes(), cap);
  const std::size_t dim = std::size_t{1} << h.modes();
  DenseOperator out(dim);
  for (const auto& t : h.terms()) {
    const auto p = realize_monomial(t.op(), h.modes(), cap);
    for (std::size_t c = 0; c < dim; ++c) out(p.row(c), c) += t.coefficient * p.value(c);
  }
  return out;
}

DenseOperator realize_stabilizer(const StabilizerSolution& s, const Hamiltonian& h, std::size_t cap) {
  check_cap(h.modes(), cap);
  const std::size_t dim = std::size_t{1} << h.modes();
  auto rho = DenseOperator::identity(dim);
  rho *= 1.0 / static_cast<double>(dim);
  for (const auto& g : s.generators) {
    const auto p = realize_monomial(h.terms()[g.term].op(), h.modes(), cap);
    p.right_multiply_one_plus(rho, static_cast<double>(g.sign));
  }
  return rho;
}

DenseOperator realize_gaussian(const MatchingPlan& plan, const SignAssignment& z, std::size_t cap) {
  check_cap(plan.modes, cap);
  if (z.size() != plan.num_pairs() || !is_full(z)) throw ValidationError("realize_gaussian: requires a full assignment");
  const std::size_t dim = std::size_t{1} << plan.modes;
  auto rho = DenseOperator::identity(dim);
  rho *= 1.0 / static_cast<double>(dim);
  for (std::size_t p = 0; p < plan.num_pairs(); ++p) {
    const MajoranaMonomial pair({plan.pairs[p].first, plan.pairs[p].second}, Phase::i());
    realize_monomial(pair, plan.modes, cap).right_multiply_one_plus(rho, static_cast<double>(z[p]));
  }
  return rho;
}

double energy(const Hamiltonian& h, const DenseOperator& rho, std::size_t cap) {
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coefficient * realize_monomial(t.op(), h.modes(), cap).trace_product(rho).real();
  return e;
}

namespace {

void require_hermitian(const DenseOperator& a) {
  const double tol = 1e-10 * (1.0 + a.max_abs());
  if (a.hermiticity_error() > tol) throw ValidationError("matrix is not Hermitian");
}

// Implicit QL on a real symmetric tridiagonal matrix: diagonal d, coupling
// e[i] between rows i and i+1. Eigenvalues are left in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.resize(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto D = [&](int i) -> double& { return d[static_cast<std::size_t>(i)]; };
  auto E = [&](int i) -> double& { return e[static_cast<std::size_t>(i)]; };

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(D(m)) + std::abs(D(m + 1));
        if (std::abs(E(m)) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 200) throw GuaranteeViolation("tridiagonal QL failed to converge");
        double g = (D(l + 1) - D(l)) / (2.0 * E(l));
        double r = std::hypot(g, 1.0);
        g = D(m) - D(l) + E(l) / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * E(i);
          const double b = c * E(i);
          r = std::hypot(f, g);
          E(i + 1) = r;
          if (r == 0.0) {
            D(i + 1) -= p;
            E(m) = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = D(i + 1) - p;
          r = (D(i) - g) * s + 2.0 * c * b;
          p = s * r;
          D(i + 1) = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        D(l) -= p;
        E(l) = g;
        E(m) = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const DenseOperator& input) {
  require_hermitian(input);
  const std::size_t n = input.dim();
  if (n == 0) return {};
  DenseOperator a = input;
  std::vector<cplx> v(n), p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double sigma2 = 0.0;
    for (std::size_t t = 0; t < len; ++t) sigma2 += std::norm(a(k + 1 + t, k));
    const double sigma = std::sqrt(sigma2);
    if (sigma == 0.0) continue;
    const cplx x0 = a(k + 1, k);
    const cplx unit = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = unit * sigma;

    // v = x + alpha e1, reflector H = I - tau v v^dagger maps x to -alpha e1.
    for (std::size_t t = 0; t < len; ++t) v[t] = a(k + 1 + t, k);
    v[0] += alpha;
    double vnorm2 = 0.0;
    for (std::size_t t = 0; t < len; ++t) vnorm2 += std::norm(v[t]);
    const double tau = 2.0 / vnorm2;

    // Trailing block B <- H B H = B - v w^dagger - w v^dagger.
    cplx vp{};
    for (std::size_t r = 0; r < len; ++r) {
      cplx acc{};
      for (std::size_t c = 0; c < len; ++c) acc += a(k + 1 + r, k + 1 + c) * v[c];
      p[r] = tau * acc;
      vp += std::conj(v[r]) * p[r];
    }
    const cplx kk = 0.5 * tau * vp;
    for (std::size_t r = 0; r < len; ++r) p[r] -= kk * v[r];
    for (std::size_t r = 0; r < len; ++r)
      for (std::size_t c = 0; c < len; ++c)
        a(k + 1 + r, k + 1 + c) -= v[r] * std::conj(p[c]) + p[r] * std::conj(v[c]);

    a(k + 1, k) = -alpha;
    a(k, k + 1) = std::conj(-alpha);
    for (std::size_t t = 1; t < len; ++t) a(k + 1 + t, k) = a(k, k + 1 + t) = 0.0;
  }

  // A unitary diagonal rescaling makes the complex subdiagonal real and
  // nonnegative without changing the spectrum.
  std::vector<double> d(n), e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

double lambda_max(const DenseOperator& a) {
  if (a.dim() == 0) throw ValidationError("lambda_max of an empty matrix");
  return eigenvalues_hermitian(a).back();
}

PowerIterationResult power_iteration_lambda_max(const DenseOperator& a, double tol, std::size_t max_iterations,
                                                std::uint64_t seed) {
  require_hermitian(a);
  const std::size_t n = a.dim();
  PowerIterationResult res;
  if (n == 0) return res;

  double shift = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < n; ++c) row += std::abs(a(r, c));
    shift = std::max(shift, row);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> v(n), w(n);
  double norm = 0.0;
  for (auto& x : v) {
    x = {gauss(rng), gauss(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);

  double prev = std::numeric_limits<double>::infinity();
  std::size_t stable = 0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    for (std::size_t r = 0; r < n; ++r) {
      cplx acc = shift * v[r];
      for (std::size_t c = 0; c < n; ++c) acc += a(r, c) * v[c];
      w[r] = acc;
    }
    double rq = 0.0, wn = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      rq += (std::conj(v[r]) * w[r]).real();
      wn += std::norm(w[r]);
    }
    double resid = 0.0;
    for (std::size_t r = 0; r < n; ++r) resid += std::norm(w[r] - rq * v[r]);
    resid = std::sqrt(resid);

    res.value = rq - shift;
    res.iterations = it;
    const double scale = 1.0 + shift;
    if (resid <= 1e-10 * scale) {
      res.converged = true;
      break;
    }
    stable = std::abs(rq - prev) <= tol * scale ? stable + 1 : 0;
    if (stable >= 100) {
      res.converged = true;
      break;
    }
    prev = rq;
    wn = std::sqrt(wn);
    if (wn == 0.0) break;
    for (std::size_t r = 0; r < n; ++r) v[r] = w[r] / wn;
  }
  return res;
}

}  // namespace fermapprox::dense
