#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fermapprox/hamiltonian.hpp"
#include "fermapprox/monomial.hpp"
#include "fermapprox/state_builder.hpp"

namespace fermapprox::dense {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultModeCap = 12;

/// Row-major complex matrix of dimension 2^n.
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<cplx>& data() const { return a_; }

  DenseOperator& operator+=(const DenseOperator& o);
  DenseOperator& operator-=(const DenseOperator& o);
  DenseOperator& operator*=(cplx s);
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(cplx s, DenseOperator a) { return a *= s; }

  cplx trace() const;
  DenseOperator adjoint() const;
  // max |A - A^dagger|
  double hermiticity_error() const;
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Matrix with exactly one nonzero per column: column c holds value[c] at
/// row[c]. Jordan-Wigner images of Majorana monomials all have this form,
/// and the form is closed under products.
class SignedPermutation {
 public:
  static SignedPermutation identity(std::size_t dim);

  std::size_t dim() const { return row_.size(); }
  std::uint32_t row(std::size_t c) const { return row_[c]; }
  cplx value(std::size_t c) const { return value_[c]; }

  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  SignedPermutation& operator*=(cplx s);

  DenseOperator to_dense() const;
  // Tr(this * rho)
  cplx trace_product(const DenseOperator& rho) const;
  // rho * (I + s * this), in place.
  void right_multiply_one_plus(DenseOperator& rho, cplx s) const;

 private:
  friend SignedPermutation jordan_wigner_sparse(MajoranaIndex, std::size_t, std::size_t);
  std::vector<std::uint32_t> row_;
  std::vector<cplx> value_;
};

// Throws CapExceeded when modes > cap.
void check_cap(std::size_t modes, std::size_t cap);

/// c_{2j-1} = Z^(j-1) X I^(n-j), c_{2j} = Z^(j-1) Y I^(n-j) for j = 1..n
/// (written with 1-based generator labels; the argument is 0-based). Mode 1
/// is the most significant bit of the basis index.
SignedPermutation jordan_wigner_sparse(MajoranaIndex i, std::size_t modes, std::size_t cap = kDefaultModeCap);
DenseOperator jordan_wigner(MajoranaIndex i, std::size_t modes, std::size_t cap = kDefaultModeCap);

/// phase * product of generator images, multiplied as matrices.
SignedPermutation realize_monomial(const MajoranaMonomial& m, std::size_t modes, std::size_t cap = kDefaultModeCap);

/// Reads a signed permutation back as (phase, support) if it is a scalar
/// multiple of some monomial image with a unit phase in {1,i,-1,-i};
/// returns false otherwise. Matching is within `tol`.
bool identify_monomial(const SignedPermutation& p, std::size_t modes, MajoranaMonomial& out, double tol = 1e-12);

DenseOperator realize_hamiltonian(const Hamiltonian& h, std::size_t cap = kDefaultModeCap);
DenseOperator realize_stabilizer(const StabilizerSolution& s, const Hamiltonian& h, std::size_t cap = kDefaultModeCap);
// rho'(z) = 2^-n prod_p (I + z_p i c_g c_h); z must be full.
DenseOperator realize_gaussian(const MatchingPlan& plan, const SignAssignment& z, std::size_t cap = kDefaultModeCap);

// Re Tr(H rho), evaluated term by term without forming H.
double energy(const Hamiltonian& h, const DenseOperator& rho, std::size_t cap = kDefaultModeCap);

/// Eigenvalues of a Hermitian matrix, ascending. Householder reduction to
/// real tridiagonal form followed by implicit QL. Throws ValidationError when
/// the input is not Hermitian within 1e-10 * (1 + max|A|).
std::vector<double> eigenvalues_hermitian(const DenseOperator& a);

double lambda_max(const DenseOperator& a);

struct PowerIterationResult {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue by shifted power iteration with Rayleigh quotients.
/// The shift makes the spectrum nonnegative so the top of the shifted
/// spectrum is the top of the original one.
PowerIterationResult power_iteration_lambda_max(const DenseOperator& a, double tol = 1e-12,
                                                std::size_t max_iterations = 200000, std::uint64_t seed = 7);

}  // namespace fermapprox::dense
