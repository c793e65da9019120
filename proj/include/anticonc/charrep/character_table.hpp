#pragma once

// Character tables by the Dixon-Schneider method: common eigenvectors of
// the class-multiplication matrices over a prime field F_l with
// l = 1 (mod exponent) and l > 2 sqrt|G|, lifted to complex values through
// the eigenvalue multiplicities of each class representative.

#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "anticonc/group/finite_group.hpp"

namespace anticonc::charrep {

using Complex = std::complex<double>;
using group::ElementIndex;
using group::FiniteGroup;

inline constexpr std::size_t kMaxClasses = 512;

struct CharacterTable {
  std::size_t group_order = 0;
  std::uint64_t exponent = 0;
  std::vector<ElementIndex> representatives;  // class representatives, identity class first
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint64_t> class_orders;     // element order per class
  std::vector<std::uint32_t> class_of;         // class per element index
  std::vector<std::uint32_t> inverse_class;    // class of g^{-1}
  std::vector<std::vector<Complex>> values;    // values[chi][class]
  std::vector<std::uint64_t> degrees;          // chi(1), rounded

  std::size_t class_count() const noexcept { return representatives.size(); }
  /// Classes of size 1.
  std::vector<std::uint32_t> central_classes() const;
  Complex value(std::size_t chi, ElementIndex g) const { return values[chi][class_of[g]]; }
};

/// Throws TooManyClasses above kMaxClasses and NoSuitablePrime when no
/// prime l = 1 + t e with l > 2 sqrt|G| exists below the search bound.
CharacterTable character_table_dixon(const FiniteGroup& group);

struct OrthogonalityReport {
  double row_defect = 0.0;     // max |<chi_i, chi_j> - delta_ij|
  double column_defect = 0.0;  // max |sum_i chi_i(C_j) conj chi_i(C_k) - delta_jk |G|/|C_j||
  std::uint64_t degree_square_sum = 0;
  double degree_rounding = 0.0;  // max |chi(1) - round(chi(1))| before rounding
};

OrthogonalityReport check_orthogonality(const CharacterTable& table);

/// (1/|G|) sum_g chi(g) conj(psi(g)) for class functions on the table's classes.
Complex class_inner_product(const CharacterTable& table, const std::vector<Complex>& chi,
                            const std::vector<Complex>& psi);

/// Class representatives as canonical encodings, sizes, and values as [re, im].
nlohmann::json character_table_to_json(const FiniteGroup& group, const CharacterTable& table);

/// Class structure shared by the Dixon table and the multiplicity checks.
/// Fills everything except values and degrees.
CharacterTable class_skeleton(const FiniteGroup& group);

}  // namespace anticonc::charrep
