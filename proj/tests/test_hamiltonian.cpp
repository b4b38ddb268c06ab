#include <doctest.h>

#include <algorithm>
#include <random>

#include "fermapprox/errors.hpp"
#include "fermapprox/instance_io.hpp"
#include "fermapprox/instances.hpp"
#include "oracle.hpp"

using namespace fermapprox;

namespace {

std::size_t naive_sparsity(const Hamiltonian& h) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < h.num_majoranas(); ++j) {
    std::size_t count = 0;
    for (const auto& t : h.terms())
      for (auto x : t.support) count += (x == j);
    best = std::max(best, count);
  }
  return best;
}

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("analyze: H_3 family statistics") {
  const auto h = optimality_family(3);
  CHECK(h.size() == 9);
  CHECK(h.sparsity() == 3);
  CHECK(h.max_locality() == 2);
  CHECK(h.total_weight() == doctest::Approx(9.0));
  CHECK(h.locality_class() == LocalityClass::strict_q);
}

TEST_CASE("analyze: single negative term") {
  const auto h = oracle::instance(1, {{{1, 2}, -2.5}});
  CHECK(h.sparsity() == 1);
  CHECK(h.max_locality() == 2);
  CHECK(h.total_weight() == doctest::Approx(2.5));
}

TEST_CASE("analyze: locality classes") {
  CHECK(oracle::instance(3, {{{1, 2}, 1}, {{3, 4, 5, 6}, 1}}).locality_class() == LocalityClass::mixed_2_4);
  CHECK(oracle::instance(3, {{{1, 2, 3, 4}, 1}, {{3, 4, 5, 6}, 1}}).locality_class() == LocalityClass::strict_q);
  CHECK(oracle::instance(3, {{{1, 2}, 1}, {{1, 2, 3, 4, 5, 6}, 1}}).locality_class() == LocalityClass::general);
  const auto empty = oracle::instance(2, {});
  CHECK(empty.empty());
  CHECK(empty.max_locality() == 0);
}

TEST_CASE("analyze: rejects malformed terms") {
  CHECK_THROWS_AS(oracle::instance(2, {{{1, 2, 3}, 1}}), ValidationError);
  CHECK_THROWS_AS(oracle::instance(2, {{{1, 5}, 1}}), ValidationError);
  CHECK_THROWS_AS(oracle::instance(2, {{{1, 2}, 0.0}}), ValidationError);
  CHECK_THROWS_AS(oracle::instance(2, {{{1, 2}, 1}, {{1, 2}, 2}}), ValidationError);
  CHECK_THROWS_AS(oracle::instance(2, {{{2, 1}, 1}}), ValidationError);
}

TEST_CASE("analyze: sparsity equals a naive recount, independent of term order") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto s = oracle::spec(InstanceKind::strict_q, 6, 3, 6, seed);
    const auto h = oracle::draw(s);
    CHECK(h.sparsity() == naive_sparsity(h));

    auto terms = h.terms();
    std::mt19937_64 rng(seed);
    std::shuffle(terms.begin(), terms.end(), rng);
    CHECK(analyze(terms, h.modes()) == h);
  }
}

TEST_CASE("find locates supports by value") {
  const auto h = optimality_family(3);
  for (std::size_t t = 0; t < h.size(); ++t) CHECK(h.find(h.terms()[t].support) == t);
  CHECK(h.find({0, 1}) == Hamiltonian::npos);
}

TEST_CASE("parse_instance") {
  SUBCASE("minimal") {
    const auto h = parse_instance("modes 2\nterm 1 2 1.0");
    CHECK(h.size() == 1);
    CHECK(h.sparsity() == 1);
    CHECK(h.modes() == 2);
  }
  SUBCASE("comments and blank lines") {
    const auto h = parse_instance("# header\n\nmodes 3\nterm 1 2 3 4 -0.5\n\nterm 5 6 2\n");
    CHECK(h.size() == 2);
    CHECK(h.total_weight() == doctest::Approx(2.5));
  }
  SUBCASE("round trip on H_2") {
    const auto h = optimality_family(2);
    const auto text = serialize_instance(h);
    CHECK(parse_instance(text) == h);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
  SUBCASE("round trip preserves awkward coefficients exactly") {
    const auto h = oracle::instance(2, {{{1, 2}, 0.1}, {{1, 2, 3, 4}, -1.0 / 3.0}, {{3, 4}, 1e-300}});
    CHECK(parse_instance(serialize_instance(h)) == h);
  }
  SUBCASE("errors") {
    CHECK(error_of("term 1 1 1.0").find("duplicate") != std::string::npos);
    CHECK(error_of("modes 2\nterm 1 2 3 1.0").find("line 2") != std::string::npos);
    CHECK(error_of("modes 2\nterm 1 5 1.0").find("line 2") != std::string::npos);
    CHECK(error_of("modes 2\nterm 2 1 1.0").find("line 2") != std::string::npos);
    CHECK(error_of("modes 2\nterm 1 2 0").find("line 2") != std::string::npos);
    CHECK(error_of("modes 2\nterm 1 2 abc").find("line 2") != std::string::npos);
    CHECK(error_of("modes 2\nterm 1 2 1\nterm 1 2 2").find("line 3") != std::string::npos);
    CHECK(error_of("modes 2\nmodes 3").find("line 2") != std::string::npos);
    CHECK(error_of("bogus 1").find("line 1") != std::string::npos);
    CHECK_FALSE(error_of("term 1 2 1.0").empty());
    CHECK_FALSE(error_of("").empty());
  }
}

TEST_CASE("instance_hash distinguishes instances") {
  const auto a = optimality_family(2);
  const auto b = oracle::instance(4, {{{1, 2}, 1}});
  CHECK(instance_hash(a) == instance_hash(optimality_family(2)));
  CHECK(instance_hash(a) != instance_hash(b));
  CHECK(instance_hash(a).size() == 16);
}
