#include "anticonc/group/catalog.hpp"

#include <numeric>

#include "anticonc/util/error.hpp"
#include "anticonc/util/modular.hpp"

namespace anticonc::group::catalog {

namespace {

GroupElement cycle(std::uint32_t degree, const std::vector<Word>& points) {
  std::vector<Word> images(degree);
  std::iota(images.begin(), images.end(), Word{0});
  for (std::size_t i = 0; i < points.size(); ++i) images[points[i]] = points[(i + 1) % points.size()];
  return GroupElement::permutation(std::move(images));
}

std::vector<Word> range(std::uint32_t n) {
  std::vector<Word> v(n);
  std::iota(v.begin(), v.end(), Word{0});
  return v;
}

}  // namespace

std::vector<GroupElement> cyclic(std::uint32_t n) {
  if (n == 0) throw Error(Errc::invalid_input, "cyclic group order must be positive");
  return {cycle(n, range(n))};
}

std::vector<GroupElement> symmetric(std::uint32_t n) {
  if (n < 2) throw Error(Errc::invalid_input, "symmetric group needs degree >= 2");
  if (n == 2) return {cycle(2, {0, 1})};
  return {cycle(n, {0, 1}), cycle(n, range(n))};
}

std::vector<GroupElement> alternating(std::uint32_t n) {
  if (n < 3) throw Error(Errc::invalid_input, "alternating group needs degree >= 3");
  std::vector<GroupElement> gens;
  for (Word i = 2; i < n; ++i) gens.push_back(cycle(n, {0, 1, i}));
  return gens;
}

std::vector<GroupElement> dihedral(std::uint32_t n) {
  if (n < 3) throw Error(Errc::invalid_input, "dihedral group needs n >= 3");
  std::vector<Word> reflection(n);
  for (Word i = 0; i < n; ++i) reflection[i] = (n - i) % n;
  return {cycle(n, range(n)), GroupElement::permutation(std::move(reflection))};
}

std::vector<GroupElement> quaternion() {
  return {GroupElement::matrix(3, {{0, -1}, {1, 0}}), GroupElement::matrix(3, {{1, 1}, {1, -1}})};
}

std::vector<GroupElement> sl2(std::uint32_t p) {
  return {GroupElement::matrix(p, {{1, 1}, {0, 1}}), GroupElement::matrix(p, {{0, -1}, {1, 0}})};
}

std::vector<std::vector<std::int64_t>> extension_block(std::uint32_t p, std::int64_t a, std::int64_t b) {
  const auto c = static_cast<std::int64_t>(modular::quadratic_non_residue(p));
  return {{a, b * c}, {b, a}};
}

std::vector<GroupElement> sl2_prime_square(std::uint32_t p) {
  if (p == 2 || !modular::is_prime(p)) throw Error(Errc::invalid_input, "sl2_prime_square needs an odd prime");
  // 2x2 matrix over F_{p^2} with entries (a_k + b_k w) -> 4x4 over F_p
  auto embed = [p](const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
    std::vector<std::vector<std::int64_t>> m(4, std::vector<std::int64_t>(4, 0));
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const auto blk = extension_block(p, entries[r * 2 + c].first, entries[r * 2 + c].second);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) m[2 * r + i][2 * c + j] = blk[i][j];
        }
      }
    }
    return GroupElement::matrix(p, m);
  };
  return {embed({{1, 0}, {1, 0}, {0, 0}, {1, 0}}),    // [[1, 1], [0, 1]]
          embed({{1, 0}, {0, 1}, {0, 0}, {1, 0}}),    // [[1, w], [0, 1]]
          embed({{0, 0}, {-1, 0}, {1, 0}, {0, 0}})};  // [[0, -1], [1, 0]]
}

}  // namespace anticonc::group::catalog
