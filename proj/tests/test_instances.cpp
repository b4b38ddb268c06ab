#include <doctest.h>

#include <set>

#include "fermapprox/conflict_graph.hpp"
#include "fermapprox/dense.hpp"
#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"
#include "fermapprox/instances.hpp"
#include "oracle.hpp"

using namespace fermapprox;

TEST_CASE("optimality family") {
  SUBCASE("n = 1") {
    const auto h = optimality_family(1);
    REQUIRE(h.size() == 1);
    CHECK(h.terms()[0].support == Support{0, 1});
    CHECK(dense::lambda_max(dense::realize_hamiltonian(h)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("n = 3") {
    const auto h = optimality_family(3);
    CHECK(h.size() == 9);
    CHECK(h.sparsity() == 3);
    CHECK(h.total_weight() == doctest::Approx(9.0));
  }
  SUBCASE("n = 4") {
    const auto h = optimality_family(4);
    CHECK(std::abs(dense::lambda_max(dense::realize_hamiltonian(h)) - 4.0) < 1e-9);
  }
  CHECK_THROWS_AS(optimality_family(0), ValidationError);
}

TEST_CASE("random_instance is deterministic in its seed") {
  for (auto kind : {InstanceKind::strict_q, InstanceKind::mixed_2_4, InstanceKind::general}) {
    const auto s = oracle::spec(kind, 5, 3, 6, 42);
    CHECK(serialize_instance(random_instance(s)) == serialize_instance(random_instance(s)));
    auto other = s;
    other.seed = 43;
    CHECK(serialize_instance(random_instance(s)) != serialize_instance(random_instance(other)));
  }
}

TEST_CASE("random_instance honors its constraints") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto kind = static_cast<InstanceKind>(seed % 3);
    auto s = oracle::spec(kind, 6, 2, 5, seed);
    const auto h = random_instance(s);
    CHECK(h.size() == s.num_terms);
    CHECK(h.sparsity() <= s.sparsity);
    std::set<Support> seen;
    for (const auto& t : h.terms()) {
      CHECK(seen.insert(t.support).second);
      CHECK(std::abs(t.coefficient) >= s.min_abs);
      CHECK(std::abs(t.coefficient) <= s.max_abs);
      if (kind == InstanceKind::strict_q) CHECK(t.support.size() == s.q);
      if (kind == InstanceKind::mixed_2_4) CHECK((t.support.size() == 2 || t.support.size() == 4));
    }
    if (kind == InstanceKind::mixed_2_4) CHECK(build_mixed24(h).max_degree() <= 4 * h.sparsity());
  }
}

TEST_CASE("strict 4-local with k = 2") {
  auto s = oracle::spec(InstanceKind::strict_q, 6, 2, 5, 5);
  s.q = 4;
  const auto h = random_instance(s);
  CHECK(h.sparsity() <= 2);
  CHECK(h.locality_class() == LocalityClass::strict_q);
}

TEST_CASE("general instances contain nested supports") {
  std::size_t nested = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto h = random_instance(oracle::spec(InstanceKind::general, 5, 3, 6, seed));
    for (const auto& a : h.terms())
      for (const auto& b : h.terms())
        if (a.support.size() < b.support.size() &&
            std::includes(b.support.begin(), b.support.end(), a.support.begin(), a.support.end()))
          ++nested;
  }
  CHECK(nested > 0);
}

TEST_CASE("infeasible specs are rejected") {
  CHECK_THROWS_AS(random_instance(oracle::spec(InstanceKind::mixed_2_4, 2, 1, 10, 1)), ValidationError);
  auto odd = oracle::spec(InstanceKind::strict_q, 4, 2, 2, 1);
  odd.q = 3;
  CHECK_THROWS_AS(random_instance(odd), ValidationError);
  auto range = oracle::spec(InstanceKind::mixed_2_4, 4, 2, 2, 1);
  range.min_abs = 2.0;
  range.max_abs = 1.0;
  CHECK_THROWS_AS(random_instance(range), ValidationError);
}
