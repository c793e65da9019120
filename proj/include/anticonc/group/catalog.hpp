#pragma once

// Generating sets for the small groups used throughout the tests, the
// acceptance suite and the CLI's named-group shortcut.

#include <cstdint>
#include <vector>

#include "anticonc/group/element.hpp"

namespace anticonc::group::catalog {

std::vector<GroupElement> cyclic(std::uint32_t n);       // permutation n-cycle
std::vector<GroupElement> symmetric(std::uint32_t n);    // (0 1), (0 1 ... n-1)
std::vector<GroupElement> alternating(std::uint32_t n);  // 3-cycles (0 1 i)
std::vector<GroupElement> dihedral(std::uint32_t n);     // symmetries of the n-gon, order 2n
std::vector<GroupElement> quaternion();                  // Q8 inside SL_2(3)
std::vector<GroupElement> sl2(std::uint32_t p);          // SL_2(p), 2x2 over F_p

/// SL_2(p^2) realized inside GL_4(p): F_{p^2} = F_p[w]/(w^2 - c) with c the
/// least non-residue, each entry a + b w acting as [[a, b c], [b, a]].
std::vector<GroupElement> sl2_prime_square(std::uint32_t p);

/// Element of F_{p^2} as the 2x2 block used by sl2_prime_square.
std::vector<std::vector<std::int64_t>> extension_block(std::uint32_t p, std::int64_t a, std::int64_t b);

}  // namespace anticonc::group::catalog
