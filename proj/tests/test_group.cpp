#include <doctest.h>

#include <algorithm>

#include "anticonc/group/catalog.hpp"
#include "anticonc/group/finite_group.hpp"
#include "anticonc/group/group_io.hpp"
#include "anticonc/util/error.hpp"
#include "oracles.hpp"

using namespace anticonc;
using group::FiniteGroup;
using group::GroupElement;
namespace catalog = group::catalog;

namespace {

std::vector<GroupElement> all_elements(const FiniteGroup& g) {
  std::vector<GroupElement> out;
  for (group::ElementIndex i = 0; i < g.order(); ++i) out.push_back(g.element(i));
  return out;
}

}  // namespace

TEST_CASE("closure orders") {
  const std::vector<GroupElement> s3{GroupElement::permutation({1, 0, 2}), GroupElement::permutation({1, 2, 0})};
  CHECK(FiniteGroup::close(s3).order() == 6);

  const std::vector<GroupElement> sl23{GroupElement::matrix(3, {{1, 1}, {0, 1}}), GroupElement::matrix(3, {{0, -1}, {1, 0}})};
  CHECK(FiniteGroup::close(sl23).order() == 24);

  const std::vector<GroupElement> c5{GroupElement::permutation({1, 2, 3, 4, 0})};
  CHECK(FiniteGroup::close(c5).order() == 5);

  CHECK(FiniteGroup::close(catalog::sl2(5)).order() == 120);
  CHECK(FiniteGroup::close(catalog::symmetric(4)).order() == 24);
  CHECK(FiniteGroup::close(catalog::alternating(4)).order() == 12);
  CHECK(FiniteGroup::close(catalog::dihedral(4)).order() == 8);
  CHECK(FiniteGroup::close(catalog::quaternion()).order() == 8);
}

TEST_CASE("closure layout and table agree with raw multiplication") {
  const auto g = FiniteGroup::close(catalog::sl2(5));
  CHECK(g.element(FiniteGroup::identity()).is_identity());
  for (group::ElementIndex a = 0; a < g.order(); a += 7) {
    for (group::ElementIndex b = 0; b < g.order(); b += 11) {
      CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
    }
    CHECK(g.element(g.inverse(a)) == g.element(a).inverse());
  }
  // closing twice gives the same enumeration
  const auto h = FiniteGroup::close(catalog::sl2(5));
  for (group::ElementIndex i = 0; i < g.order(); ++i) REQUIRE(g.element(i) == h.element(i));
}

TEST_CASE("closure cap and mixed ambients") {
  CHECK_THROWS_AS(FiniteGroup::close(catalog::sl2(7), 100), Error);
  try {
    FiniteGroup::close(catalog::sl2(7), 100);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
  const std::vector<GroupElement> mixed{GroupElement::permutation({1, 0}), GroupElement::matrix(3, {{1, 1}, {0, 1}})};
  try {
    FiniteGroup::close(mixed);
    FAIL("expected MixedVariants");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mixed_variants);
  }
}

TEST_CASE("element orders") {
  const auto id = GroupElement::matrix(5, {{1, 0}, {0, 1}});
  CHECK(group::raw_order(id) == 1);
  const auto u = GroupElement::matrix(5, {{1, 1}, {0, 1}});
  CHECK(group::raw_order(u) == 5);
  CHECK(oracle::brute_order(u) == 5);
  CHECK(group::raw_order(GroupElement::matrix(7, {{-1, 0}, {0, -1}})) == 2);

  const auto g = FiniteGroup::close(catalog::sl2(5));
  for (group::ElementIndex i = 0; i < g.order(); ++i) {
    REQUIRE(group::element_order(g, i) == oracle::brute_order(g.element(i)));
  }
}

TEST_CASE("conjugacy classes match brute conjugation") {
  const auto s3 = FiniteGroup::close(catalog::symmetric(3));
  auto sizes = group::conjugacy_classes(s3).sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  for (const auto& gens : {catalog::quaternion(), catalog::symmetric(4), catalog::sl2(3), catalog::sl2(5), catalog::dihedral(5)}) {
    const auto g = FiniteGroup::close(gens);
    auto got = group::conjugacy_classes(g).sizes;
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_class_sizes(all_elements(g)));
  }
  CHECK(group::conjugacy_classes(FiniteGroup::close(catalog::quaternion())).count() == 5);

  const auto c7 = FiniteGroup::close(catalog::cyclic(7));
  for (auto s : group::conjugacy_classes(c7).sizes) CHECK(s == 1);
}

TEST_CASE("center and centralizer") {
  const auto s3 = FiniteGroup::close(catalog::symmetric(3));
  CHECK(group::center(s3) == std::vector<group::ElementIndex>{0});
  const auto sl25 = FiniteGroup::close(catalog::sl2(5));
  const auto z = group::center(sl25);
  CHECK(z.size() == 2);
  CHECK(z.size() == oracle::brute_center_order(all_elements(sl25)));
  CHECK(sl25.element(z[1]) == GroupElement::matrix(5, {{-1, 0}, {0, -1}}));
  CHECK(group::centralizer_order(sl25, FiniteGroup::identity()) == 120);
}

TEST_CASE("group spec parsing") {
  using nlohmann::json;
  const auto spec = group::parse_group_spec(json::parse(R"({"kind":"named","name":"SL2","q":5})"));
  CHECK(FiniteGroup::close(spec.generators).order() == 120);
  const auto perm = group::parse_group_spec(json::parse(R"({"kind":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]})"));
  CHECK(FiniteGroup::close(perm.generators).order() == 6);
  CHECK_THROWS_AS(group::parse_group_spec(json::parse(R"({"kind":"permutation","degree":3,"generators":[[1,0,2]],"x":1})")), Error);
  CHECK_THROWS_AS(group::parse_group_spec(json::parse(R"({"kind":"matrix_mod_p","p":5,"m":2,"generators":[[[1,1],[1,1]]]})")), Error);
}

TEST_CASE("encoding round trip") {
  const auto g = FiniteGroup::close(catalog::sl2_prime_square(3));
  CHECK(g.order() == 720);
  for (group::ElementIndex i = 0; i < g.order(); i += 13) {
    const auto e = g.element(i);
    CHECK(GroupElement::decode(e.ambient(), e.encode()) == e);
  }
}
