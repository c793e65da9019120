#pragma once

// Eigenvalue multiplicities of Phi(g) read off the character, and the
// multiplicity window ((1/k1 - alpha) chi(1), (1/k1 + alpha) chi(1)) that
// holds when |chi(x)/chi(1)| <= alpha off the center.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "anticonc/charrep/character_table.hpp"

namespace anticonc::charrep {

struct MultiplicityProfile {
  ElementIndex g = 0;
  std::uint64_t k = 1;   // ord(g)
  std::uint64_t k1 = 1;  // order of g Z(G) in G/Z(G); 0 when not computed
  Complex epsilon;       // e^{2 pi i / k}
  std::vector<std::uint64_t> mult;  // mult[j]: multiplicity of epsilon^j
};

/// mult_j = (1/k) sum_i chi(g^i) epsilon^{-ij} from chi(g^0), ..., chi(g^{k-1}).
/// Throws NonIntegralMultiplicity when a value is more than 1e-6 from a
/// nonnegative integer or the multiplicities do not sum to chi(1).
MultiplicityProfile eigenvalue_multiplicities(std::span<const Complex> chi_powers, ElementIndex g, std::uint64_t k,
                                              std::uint64_t degree);

/// Profile of character `chi` at g, with k1 filled in from the table's center.
MultiplicityProfile multiplicity_profile(const FiniteGroup& group, const CharacterTable& table, std::size_t chi,
                                         ElementIndex g);

/// Smallest t >= 1 with g^t central.
std::uint64_t central_order(const FiniteGroup& group, const CharacterTable& table, ElementIndex g);

enum class BoundStatus { passed, violated, vacuous, hypothesis_failed };
std::string status_name(BoundStatus s);

struct MultiplicityEntry {
  std::size_t chi = 0;
  std::size_t cls = 0;
  ElementIndex g = 0;
  std::uint64_t degree = 0;
  std::uint64_t k = 0;
  std::uint64_t k1 = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::uint64_t> candidate_exponents;  // j with epsilon^{j k1} = chi(g^{k1}) / chi(1)
  std::vector<std::uint64_t> candidate_mults;
  BoundStatus status = BoundStatus::passed;
};

struct MultiplicityReport {
  double alpha = 0.0;
  std::vector<double> chi_ratio;  // per character: max |chi(x)/chi(1)| off the center (0 for linear)
  std::vector<MultiplicityEntry> entries;
  std::size_t passed = 0, violated = 0, vacuous = 0, hypothesis_failed = 0;
};

/// One entry per nonlinear chi and noncentral class representative. The
/// hypothesis is checked per character with 1e-9 slack; strict inequalities
/// are checked with a 1e-9 margin.
MultiplicityReport check_multiplicity_bounds(const CharacterTable& table, const FiniteGroup& group, double alpha);

struct CharacterRatio {
  double value = 0.0;
  std::size_t chi = 0;
  std::size_t cls = 0;
};

/// max over nonlinear chi and noncentral x of |chi(x)|/chi(1); empty when
/// the group has no nonlinear characters.
std::optional<CharacterRatio> max_character_ratio(const CharacterTable& table);

nlohmann::json multiplicity_report_to_json(const MultiplicityReport& report);

}  // namespace anticonc::charrep
