#pragma once

// Sequence files, distribution dumps and the (n, rho, bound) CSV.
//
//   {"elements": [3, [[1,1],[0,1]], ...], "repeat": 4, "K": 5}
//
// Integer entries are element indices of the enumerated group; anything else
// is an inline element in the ambient's JSON shape. "repeat" concatenates the
// list with itself that many times.

#include <filesystem>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "anticonc/walk/exact.hpp"
#include "anticonc/walk/sequence.hpp"

namespace anticonc::walk {

/// `group` may be null, in which case index entries are rejected.
SignedSequence parse_sequence(const nlohmann::json& j, const group::Ambient& ambient, const FiniteGroup* group);
SignedSequence load_sequence(const std::filesystem::path& path, const group::Ambient& ambient,
                             const FiniteGroup* group);

nlohmann::json sequence_to_json(const SignedSequence& seq);

/// {"denom_exp": n, "distribution": [{"element": [words], "count": "decimal"}, ...]}
/// over the support, ascending element index.
nlohmann::json distribution_to_json(const FiniteGroup& group, const ExactDistribution& dist);

/// Exact rationals as {"count": decimal-string, "denom_exp": n}.
nlohmann::json rational_to_json(const DyadicRational& r);

struct SweepRow {
  unsigned n = 0;
  DyadicRational rho;
  double loe = 0.0;
  double theorem_141 = 0.0;
};

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace anticonc::walk
