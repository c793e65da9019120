#pragma once

// The quantitative skeleton of the large-representation estimate, evaluated
// on an explicit irrep: thresholds d0 and l0, the per-element multiplicity
// caps m_i, the predicted singular-value cascade, and the unconditional
// product inequality prod_{j<=l} s_j(M) <= prod_i prod_{j<=l} s_j(B_i).
// Only the last one is a theorem at this scale; everything else is reported.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "anticonc/charrep/irreps.hpp"
#include "anticonc/spectral/spectral.hpp"

namespace anticonc::spectral {

using group::ElementIndex;
using group::FiniteGroup;

struct CascadeRow {
  std::size_t l = 0;
  double observed = 0.0;              // s_l(M)
  std::optional<double> predicted;    // exp(-n l^2 / (422 d^2)), only for l > l0
  double for_s6_log_lhs = 0.0;        // log prod_{j<=l} s_j(M)
  double for_s6_log_rhs = 0.0;        // log prod_i prod_{j<=l} s_j(B_i)
  bool for_s6_holds = true;
  /// (a_i, b_i) with l = 4 m_i a_i + b_i, for l > l0 and m_i > 0.
  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> ab;
};

struct ProofDiagnostics {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t s = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  // d0 = p^{(m^2 - m - 1)/2}; the exponent is a half-integer, so d0 is kept
  // as its exact square together with its floor and a double.
  mpz_class d0_squared;
  mpz_class d0_floor;
  double d0 = 0.0;
  bool large_representation = false;  // d >= d0, decided as d^2 >= d0^2
  std::vector<std::uint64_t> k;       // ord(A_i)
  std::vector<std::uint64_t> m_cap;   // m_i = floor(3d / k_i)
  std::uint64_t l0 = 0;               // ceil(120 d / s)
  bool cascade_vacuous = false;       // l0 >= d: no l in (l0, d]
  std::vector<CascadeRow> rows;       // l = 1..d
  double abs_trace = 0.0;             // |tr M|
  double trace_bound = 0.0;           // 120 d / s + 1 + 18.3 d / sqrt(n)
  bool trace_within = false;
  double small_mass_bound = 0.0;      // 5 / (3 p)
  double max_b_singular = 0.0;        // max_i s_1(B_i)
  bool for_s6_all_hold = true;
};

/// Angle theta in [0, pi/2] with cos(theta) = |cos(2 pi j / k)|.
double folded_angle(std::uint64_t j, std::uint64_t k);

/// M = (prod_i B_i) Phi(B^{-1}) with B_i = (Phi(A_i) + Phi(A_i^{-1}))/2.
/// Requires m >= 2, s >= 1 and a non-empty sequence.
ProofDiagnostics proof_diagnostics(const FiniteGroup& group, std::uint64_t p, std::uint64_t m, std::uint64_t s,
                                   const charrep::UnitaryIrrep& irrep, std::span<const ElementIndex> sequence,
                                   ElementIndex b);

/// Columns: l, observed_s_l, predicted_bound, for_s6_lhs, for_s6_rhs.
void write_diagnostics_csv(std::ostream& out, const ProofDiagnostics& diag);
nlohmann::json diagnostics_to_json(const ProofDiagnostics& diag);

}  // namespace anticonc::spectral
