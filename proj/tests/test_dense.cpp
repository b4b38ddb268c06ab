#include <doctest.h>

#include <cmath>
#include <random>

#include "fermapprox/coloring.hpp"
#include "fermapprox/dense.hpp"
#include "fermapprox/errors.hpp"
#include "fermapprox/instances.hpp"
#include "fermapprox/state_builder.hpp"
#include "oracle.hpp"

using namespace fermapprox;
using oracle::cplx;

TEST_CASE("Jordan-Wigner base case") {
  CHECK(dense::max_abs_diff(dense::jordan_wigner(0, 1), oracle::pauli('X')) == 0.0);
  CHECK(dense::max_abs_diff(dense::jordan_wigner(1, 1), oracle::pauli('Y')) == 0.0);
}

TEST_CASE("sparse images match Kronecker products") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (MajoranaIndex j = 0; j < 2 * n; ++j)
      CHECK(dense::max_abs_diff(dense::jordan_wigner(j, n), oracle::majorana(j, n)) == 0.0);
}

TEST_CASE("anticommutation relations, n = 3") {
  const std::size_t n = 3, dim = 8;
  double worst = 0;
  for (MajoranaIndex a = 0; a < 2 * n; ++a)
    for (MajoranaIndex b = 0; b < 2 * n; ++b) {
      auto ca = dense::jordan_wigner(a, n), cb = dense::jordan_wigner(b, n);
      auto acomm = ca * cb;
      acomm += cb * ca;
      auto expected = dense::DenseOperator(dim);
      if (a == b) expected = cplx(2.0) * dense::DenseOperator::identity(dim);
      worst = std::max(worst, dense::max_abs_diff(acomm, expected));
    }
  CHECK(worst <= 1e-14);
}

TEST_CASE("term operators are Hermitian") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Support s;
    for (MajoranaIndex j = 0; j < 8; ++j)
      if (rng() & 1) s.push_back(j);
    if (s.empty() || s.size() % 2) continue;
    const auto op = dense::realize_monomial(MajoranaMonomial::term_operator(s), 4).to_dense();
    CHECK(op.hermiticity_error() < 1e-14);
  }
}

TEST_CASE("signed permutation products agree with dense products") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Support a, b;
    for (MajoranaIndex j = 0; j < 6; ++j) {
      if (rng() & 1) a.push_back(j);
      if (rng() & 1) b.push_back(j);
    }
    const auto pa = dense::realize_monomial(MajoranaMonomial(a), 3);
    const auto pb = dense::realize_monomial(MajoranaMonomial(b), 3);
    CHECK(dense::max_abs_diff((pa * pb).to_dense(), pa.to_dense() * pb.to_dense()) < 1e-14);
    MajoranaMonomial back;
    REQUIRE(dense::identify_monomial(pa * pb, 3, back));
    CHECK(back == MajoranaMonomial(a) * MajoranaMonomial(b));
  }
}

TEST_CASE("realizations") {
  SUBCASE("empty Hamiltonian is the zero matrix") {
    const auto H = dense::realize_hamiltonian(oracle::instance(2, {}));
    CHECK(H.max_abs() == 0.0);
  }
  SUBCASE("Hamiltonian matches the Kronecker oracle") {
    const auto h = oracle::draw(oracle::spec(InstanceKind::general, 4, 2, 4, 3));
    CHECK(dense::max_abs_diff(dense::realize_hamiltonian(h), oracle::hamiltonian(h)) < 1e-13);
  }
  SUBCASE("stabilizer {1,2} on two modes: eigenvalues 0, 0, 1/2, 1/2") {
    const auto h = oracle::instance(2, {{{1, 2}, 1.0}});
    StabilizerSolution s;
    s.modes = 2;
    s.generators = {{0, 1}};
    const auto ev = dense::eigenvalues_hermitian(dense::realize_stabilizer(s, h));
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.0));
    CHECK(ev[1] == doctest::Approx(0.0));
    CHECK(ev[2] == doctest::Approx(0.5));
    CHECK(ev[3] == doctest::Approx(0.5));
  }
  SUBCASE("stabilizer states: trace 1, PSD, energy equals the certified value") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto h = oracle::draw(oracle::spec(InstanceKind::mixed_2_4, 4, 3, 6, seed));
      const auto g = build_mixed24(h);
      const auto stab = build_stabilizer(heaviest_class(greedy_color(g, h), h), h, g);
      const auto rho = dense::realize_stabilizer(stab, h);
      CHECK(std::abs(rho.trace() - cplx(1.0)) < 1e-12);
      CHECK(dense::eigenvalues_hermitian(rho).front() > -1e-12);
      CHECK(dense::energy(h, rho) == doctest::Approx(stab.certified_energy).epsilon(1e-12));
      for (const auto& gen : stab.generators) {
        // Tr(c^Gamma rho) = sign(H_Gamma)
        const auto op = dense::realize_monomial(h.terms()[gen.term].op(), h.modes());
        CHECK(std::abs(op.trace_product(rho) - cplx(gen.sign)) < 1e-12);
      }
    }
  }
  SUBCASE("Gaussian states: trace 1 and PSD") {
    const auto h = oracle::draw(oracle::spec(InstanceKind::mixed_2_4, 4, 2, 6, 9));
    const auto g = build_mixed24(h);
    const auto plan = build_matching_plan(build_stabilizer(heaviest_class(greedy_color(g, h), h), h, g), h);
    for (const auto& z : enumerate_valid_assignments(plan)) {
      const auto rho = dense::realize_gaussian(plan, z);
      CHECK(std::abs(rho.trace() - cplx(1.0)) < 1e-12);
      CHECK(dense::eigenvalues_hermitian(rho).front() > -1e-12);
    }
  }
}

TEST_CASE("lambda_max") {
  CHECK(dense::lambda_max(dense::realize_hamiltonian(optimality_family(2))) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dense::lambda_max(dense::realize_hamiltonian(oracle::instance(2, {{{1, 2, 3, 4}, -3.0}}))) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(dense::lambda_max(dense::realize_hamiltonian(oracle::instance(1, {{{1, 2}, -3.0}}))) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eigensolver agrees with Jacobi and power iteration") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto kind = seed % 2 ? InstanceKind::mixed_2_4 : InstanceKind::general;
    const auto h = oracle::draw(oracle::spec(kind, 4, 3, 6, seed));
    const auto H = dense::realize_hamiltonian(h);
    const auto ev = dense::eigenvalues_hermitian(H);
    const auto ref = oracle::jacobi_eigenvalues(oracle::hamiltonian(h));
    REQUIRE(ev.size() == ref.size());
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-9);
    const auto pi = dense::power_iteration_lambda_max(H);
    CHECK(std::abs(pi.value - ev.back()) < 1e-8);
  }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  dense::DenseOperator a(2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(dense::eigenvalues_hermitian(a), ValidationError);
}

TEST_CASE("mode cap") {
  CHECK_THROWS_AS(dense::check_cap(13, dense::kDefaultModeCap), CapExceeded);
  CHECK_NOTHROW(dense::check_cap(12, dense::kDefaultModeCap));
  CHECK_THROWS_AS(dense::realize_hamiltonian(oracle::instance(5, {{{1, 2}, 1.0}}), 4), CapExceeded);
}
