#include <doctest.h>

#include <random>

#include "anticonc/group/catalog.hpp"
#include "anticonc/walk/bounds.hpp"
#include "anticonc/walk/exact.hpp"
#include "anticonc/walk/monte_carlo.hpp"
#include "anticonc/walk/sequence_io.hpp"
#include "anticonc/util/error.hpp"
#include "oracles.hpp"

using namespace anticonc;
using group::FiniteGroup;
using group::GroupElement;
namespace catalog = group::catalog;

namespace {

// Unipotent element of order p, so all-equal sequences of length < p see no wraparound.
GroupElement unipotent(std::uint32_t p) { return GroupElement::matrix(p, {{1, 1}, {0, 1}}); }

GroupElement power(GroupElement a, std::int64_t k) {
  if (k < 0) {
    a = a.inverse();
    k = -k;
  }
  GroupElement x = GroupElement::identity(a.ambient());
  for (std::int64_t i = 0; i < k; ++i) x = x * a;
  return x;
}

std::vector<group::ElementIndex> random_sequence(const FiniteGroup& g, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<group::ElementIndex> pick(1, static_cast<group::ElementIndex>(g.order() - 1));
  std::vector<group::ElementIndex> s(n);
  for (auto& x : s) x = pick(rng);
  return s;
}

}  // namespace

TEST_CASE("exact distribution small cases") {
  const auto a = unipotent(11);
  const auto g = FiniteGroup::close(std::vector{a});
  const auto ia = g.index_of(a);

  auto d1 = walk::exact_distribution(g, std::vector{ia});
  CHECK(d1.denom_exp == 1);
  CHECK(d1.counts[ia] == 1);
  CHECK(d1.counts[g.inverse(ia)] == 1);
  CHECK(d1.total() == 2);

  auto d4 = walk::exact_distribution(g, std::vector(4, ia));
  CHECK(d4.counts[g.index_of(power(a, 0))] == 6);
  CHECK(d4.counts[g.index_of(power(a, 2))] == 4);
  CHECK(d4.counts[g.index_of(power(a, -2))] == 4);
  CHECK(d4.counts[g.index_of(power(a, 4))] == 1);
  CHECK(d4.counts[g.index_of(power(a, -4))] == 1);
  CHECK(d4.support().size() == 5);

  const auto t = GroupElement::permutation({1, 0});
  const auto c2 = FiniteGroup::close(std::vector{t});
  const auto r = walk::rho_exact(c2, std::vector<group::ElementIndex>(3, 1));
  CHECK(r.count == 8);
  CHECK(r.value() == 1.0);
  CHECK(r.maximizers == std::vector<group::ElementIndex>{1});
}

TEST_CASE("all-equal sequences give the central binomial coefficient") {
  const auto a = unipotent(67);
  const auto g = FiniteGroup::close(std::vector{a});
  const auto ia = g.index_of(a);
  for (unsigned n = 1; n <= 64; ++n) {
    const auto r = walk::rho_exact(g, std::vector(n, ia));
    const auto row = oracle::pascal_row(n);
    REQUIRE(r.count == row[n / 2]);
    CHECK(r.denom_exp == n);
    if (n % 2 == 0) {
      CHECK(r.maximizers == std::vector<group::ElementIndex>{FiniteGroup::identity()});
    } else {
      CHECK(r.maximizers.size() == 2);
    }
  }
  const auto c3 = FiniteGroup::close(std::vector{GroupElement::permutation({1, 2, 0})});
  const auto r = walk::rho_exact(c3, std::vector<group::ElementIndex>(2, 1));
  CHECK(r.count == 2);
  CHECK(r.maximizers == std::vector<group::ElementIndex>{0});
}

TEST_CASE("convolution matches brute enumeration") {
  std::mt19937_64 rng(11);
  for (const auto& gens : {catalog::sl2(5), catalog::symmetric(4), catalog::quaternion()}) {
    const auto g = FiniteGroup::close(gens);
    for (int trial = 0; trial < 10; ++trial) {
      const auto idx = random_sequence(g, 1 + trial, rng);
      const auto dist = walk::exact_distribution(g, idx);
      const auto seq = walk::SignedSequence::from_indices(g, idx);
      const auto brute = oracle::brute_signed_products(seq.elements());
      for (const auto& [e, c] : brute) REQUIRE(dist.counts[g.index_of(e)] == c);
      CHECK(dist.support().size() == brute.size());
      CHECK(walk::rho_exact(g, idx).count == oracle::brute_max_count(seq.elements()));
    }
  }
}

TEST_CASE("threads, sparse path and prefix sweep agree") {
  const auto g = FiniteGroup::close(catalog::sl2(7));
  std::mt19937_64 rng(3);
  const auto idx = random_sequence(g, 9, rng);
  const auto one = walk::exact_distribution(g, idx, 1);
  const auto four = walk::exact_distribution(g, idx, 4);
  CHECK(one.counts == four.counts);
  const auto sparse = walk::exact_distribution_sparse(g, idx);
  for (const auto& [e, c] : sparse.counts) CHECK(one.counts[e] == c);
  const auto sweep = walk::rho_prefix_sweep(g, idx);
  REQUIRE(sweep.size() == idx.size());
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    const std::vector prefix(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    CHECK(sweep[k - 1].count == walk::rho_exact(g, prefix).count);
  }
}

TEST_CASE("sequence validation") {
  const auto g = FiniteGroup::close(catalog::sl2(5));
  CHECK_THROWS_AS(walk::exact_distribution(g, std::vector<group::ElementIndex>{}), Error);
  try {
    walk::exact_distribution(g, std::vector<group::ElementIndex>{0});
    FAIL("identity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_non_trivial);
  }
  using nlohmann::json;
  const auto amb = group::Ambient::matrix_mod_p(5, 2);
  const auto seq = walk::parse_sequence(json::parse(R"({"elements":[[[1,1],[0,1]], 3], "repeat": 2})"), amb, &g);
  CHECK(seq.length() == 4);
  CHECK(seq.min_order() == 5);
  CHECK_THROWS_AS(walk::parse_sequence(json::parse(R"({"elements":[3]})"), amb, nullptr), Error);
  CHECK_THROWS_AS(walk::parse_sequence(json::parse(R"({"elements":[3],"bogus":1})"), amb, &g), Error);
}

TEST_CASE("torsion lower bound") {
  for (std::uint32_t s = 3; s <= 12; ++s) {
    std::vector<group::Word> cyc(s);
    for (std::uint32_t i = 0; i < s; ++i) cyc[i] = (i + 1) % s;
    const auto g = FiniteGroup::close(std::vector{GroupElement::permutation(cyc)});
    for (unsigned n : {10U, 50U}) {
      const auto r = walk::rho_exact(g, std::vector<group::ElementIndex>(n, 1));
      CHECK(r.rational().at_least_reciprocal(s));
    }
  }
}

TEST_CASE("monte carlo") {
  const auto t = GroupElement::permutation({1, 0});
  const walk::SignedSequence order2({t, t, t});
  CHECK(walk::rho_monte_carlo(order2, 1000, 5).plug_in_max_frequency == 1.0);

  const auto g = FiniteGroup::close(catalog::sl2(5));
  std::mt19937_64 rng(8);
  const auto idx = random_sequence(g, 8, rng);
  const auto seq = walk::SignedSequence::from_indices(g, idx);
  const double exact = walk::rho_exact(g, idx).value();
  const auto mc1 = walk::rho_monte_carlo(seq, 100'000, 42, 1);
  const auto mc4 = walk::rho_monte_carlo(seq, 100'000, 42, 4);
  CHECK(mc1.max_count == mc4.max_count);
  CHECK(mc1.argmax_encoding == mc4.argmax_encoding);
  CHECK(mc1.distinct_products == mc4.distinct_products);
  CHECK(std::abs(mc1.plug_in_max_frequency - exact) <= 5.0 * std::sqrt(exact * (1 - exact) / 100'000.0));
  CHECK(walk::sample_sign(1, 2, 3) == walk::sample_sign(1, 2, 3));
}

TEST_CASE("closed-form bounds") {
  CHECK(walk::loe_binomial_bound(1).to_double() == 0.5);
  CHECK(walk::loe_binomial_bound(4).numerator == 6);
  CHECK(walk::loe_binomial_bound(64).numerator == oracle::pascal_row(64)[32]);

  auto b = walk::theorem_bound(4, 100);
  CHECK(b.value == doctest::Approx(35.25));
  CHECK(b.vacuous);
  b = walk::theorem_bound(1000, 1'000'000);
  CHECK(b.value == doctest::Approx(0.141));
  CHECK_FALSE(b.vacuous);
  b = walk::theorem_bound(150, 1'000'000);
  CHECK(b.value == doctest::Approx(0.94));
  CHECK_FALSE(b.vacuous);

  CHECK(walk::main3_bound(149, 150, 400).value == doctest::Approx(2.0 / 149 + 0.8 + 0.95));
  CHECK(walk::main3_bound(999'983, 10'000, 100'000'000).value == doctest::Approx(2.0 / 999'983 + 0.012 + 0.0019));
  CHECK(walk::main3_bound(149, 150, 400).value > walk::main3_bound(151, 150, 400).value);
  CHECK(walk::main3_bound(149, 150, 400).value > walk::main3_bound(149, 151, 400).value);
  CHECK_THROWS_AS(walk::main3_bound(150, 150, 400), Error);
}

TEST_CASE("integer signed sums") {
  for (unsigned n : {1U, 5U, 12U}) {
    const auto r = walk::example2_check(std::vector<std::int64_t>(n, 1));
    CHECK(r.max_count == oracle::pascal_row(n)[n / 2]);
    CHECK(r.pass);
  }
  const auto r = walk::example2_check(std::vector<std::int64_t>{1, 2});
  CHECK(r.max_count == 1);
  CHECK(r.maximizers == std::vector<std::int64_t>{-3, -1, 1, 3});
  CHECK(r.pass);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> a(4 + trial % 14);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % 5 + 1) * (rng() & 1 ? -1 : 1);
    REQUIRE(walk::example2_check(a).max_count == oracle::brute_signed_sum_max(a));
  }
  CHECK_THROWS_AS(walk::example2_check(std::vector<std::int64_t>{1, 0}), Error);
  CHECK_THROWS_AS(walk::example2_check(std::vector<std::int64_t>{1, 5}, 3), Error);
}
