#pragma once

// JSON group specifications and element encodings.
//
//   {"kind":"matrix_mod_p","p":5,"m":2,"generators":[[[1,1],[0,1]], ...]}
//   {"kind":"permutation","degree":4,"generators":[[1,0,2,3], ...]}
//   {"kind":"table","size":k,"table":[[...], ...],"generators":[...]}   (generators optional)
//   {"kind":"named","name":"SL2","q":49}                                 (shortcut, see catalog)
//
// Unknown keys are rejected.

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "anticonc/group/element.hpp"
#include "anticonc/group/finite_group.hpp"

namespace anticonc::group {

struct GroupSpec {
  Ambient ambient;
  std::vector<GroupElement> generators;
};

GroupSpec parse_group_spec(const nlohmann::json& j);
GroupSpec load_group_spec(const std::filesystem::path& path);

/// Inline element in the ambient's natural JSON shape: nested rows for
/// matrices, image list for permutations, {"table": k} for table elements.
GroupElement parse_element(const Ambient& ambient, const nlohmann::json& j);
nlohmann::json element_to_json(const GroupElement& g);

/// Canonical encoding as an array of words (matrix residues or images).
nlohmann::json encoding_to_json(std::span<const Word> words);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace anticonc::group
