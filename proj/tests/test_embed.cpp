#include <doctest.h>

#include <algorithm>

#include "anticonc/embed/embed.hpp"
#include "anticonc/util/error.hpp"
#include "oracles.hpp"

using namespace anticonc;
using embed::RationalMatrix;

namespace {

RationalMatrix mat(std::vector<std::vector<mpq_class>> rows) { return RationalMatrix(std::move(rows)); }

std::vector<std::uint64_t> bad_primes(const embed::BadPrimeSet& b) {
  std::vector<std::uint64_t> out;
  for (const auto& p : b.primes) out.push_back(p.prime.get_ui());
  return out;
}

}  // namespace

TEST_CASE("rational matrices") {
  const auto a = mat({{1, mpq_class(1, 2)}, {0, 2}});
  CHECK(a.determinant() == 2);
  CHECK(a.denominator_lcm() == 2);
  CHECK_FALSE(a.is_identity());
  CHECK((RationalMatrix::identity(3) * RationalMatrix::identity(3)).is_identity());
  try {
    mat({{1, 2}, {2, 4}});
    FAIL("singular accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_invertible);
  }
}

TEST_CASE("orders over Q") {
  CHECK(embed::finite_order_bound(2) == 12);  // lcm of 1, 2, 3, 4, 6
  CHECK(embed::rational_order(mat({{-1, 0}, {0, -1}})).order == 2u);
  CHECK(embed::rational_order(mat({{0, -1}, {1, -1}})).order == 3u);
  CHECK(embed::rational_order(mat({{0, -1}, {1, 1}})).order == 6u);
  CHECK_FALSE(embed::rational_order(mat({{1, 1}, {0, 1}})).order);
  CHECK_FALSE(embed::rational_order(mat({{2, 0}, {0, 1}})).order);
}

TEST_CASE("factoring against trial division") {
  for (std::uint64_t n : {2ULL, 12ULL, 97ULL, 1001ULL, 600851475143ULL, 999999000001ULL, 1ULL << 40}) {
    const auto f = embed::factor(mpz_class(std::to_string(n)));
    CHECK(f.cofactors.empty());
    std::vector<std::uint64_t> got;
    for (const auto& p : f.primes) got.push_back(p.get_ui());
    CHECK(got == oracle::trial_factor(n));
  }
  // product of two primes above the sieve
  const mpz_class big = mpz_class("1000003") * mpz_class("1000033");
  const auto f = embed::factor(big);
  CHECK(f.primes.size() == 2);
}

TEST_CASE("bad prime sets") {
  const auto u = embed::bad_prime_set({mat({{1, 1}, {0, 1}})}, 5);
  CHECK(bad_primes(u) == std::vector<std::uint64_t>{2, 3});
  const auto m = embed::bad_prime_set({mat({{-1, 0}, {0, -1}})}, 10);
  CHECK(bad_primes(m) == std::vector<std::uint64_t>{2});
  bool saw_eight = false;
  for (const auto& [src, v] : m.obstructions) saw_eight = saw_eight || v == 8;
  CHECK(saw_eight);

  // every prime dividing 2^j - 1 for j < 6 has to be avoided
  const auto d = embed::bad_prime_set({mat({{2, 0}, {0, 1}})}, 6);
  const auto got = bad_primes(d);
  for (std::uint64_t j = 1; j < 6; ++j) {
    for (auto p : oracle::trial_factor((1ULL << j) - 1)) CHECK(std::find(got.begin(), got.end(), p) != got.end());
  }

  try {
    embed::bad_prime_set({RationalMatrix::identity(2)}, 4);
    FAIL("identity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_non_trivial);
  }
}

TEST_CASE("embedding examples") {
  const auto u = embed::embed_mod_p({mat({{1, 1}, {0, 1}})}, 5, 2);
  CHECK(u.p == 5);
  CHECK(u.reports[0].clause == "ii");
  CHECK(u.reports[0].image_order == 5u);
  CHECK(u.reports[0].satisfied);

  const auto m = embed::embed_mod_p({mat({{-1, 0}, {0, -1}})}, 10, 2);
  CHECK(m.p == 3);
  CHECK(m.reports[0].clause == "i");
  CHECK(m.reports[0].image_order == 2u);

  const auto d = embed::embed_mod_p({mat({{2, 0}, {0, 1}})}, 6, 2);
  CHECK(d.reports[0].clause == "ii");
  CHECK(d.reports[0].satisfied);
  CHECK(oracle::mult_order(2, d.p) >= 6);
  CHECK(*d.reports[0].image_order == oracle::mult_order(2, d.p));

  CHECK(embed::default_p_min(2) == 5);
  CHECK(embed::default_p_min(7) == 8);
}

TEST_CASE("matrix parsing") {
  using nlohmann::json;
  const auto ms = embed::parse_matrices(json::parse(R"({"matrices":[[["1","1/2"],[0,1]]],"n":3})"));
  REQUIRE(ms.size() == 1);
  CHECK(ms[0](0, 1) == mpq_class(1, 2));
  CHECK_THROWS_AS(embed::parse_matrices(json::parse(R"([[["x",0],[0,1]]])")), Error);
}
