#include <cmath>
#include "anticonc/walk/sequence_io.hpp"

#include <iomanip>
#include <limits>

#include "anticonc/group/group_io.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::walk {

SignedSequence parse_sequence(const nlohmann::json& j, const group::Ambient& ambient, const FiniteGroup* group) {
  if (!j.is_object()) throw Error(Errc::invalid_input, "sequence spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "elements" && key != "repeat" && key != "K") {
      throw Error(Errc::invalid_input, "unknown key in sequence spec: " + key);
    }
  }
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw Error(Errc::invalid_input, "sequence spec needs an \"elements\" array");
  }
  std::vector<GroupElement> base;
  for (const auto& e : j["elements"]) {
    if (e.is_number_integer()) {
      if (group == nullptr) throw Error(Errc::invalid_input, "element indices need an enumerated group");
      const auto idx = e.get<std::int64_t>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= group->order()) {
        throw Error(Errc::not_in_group, "element index out of range: " + std::to_string(idx));
      }
      base.push_back(group->element(static_cast<ElementIndex>(idx)));
    } else {
      base.push_back(group::parse_element(ambient, e));
    }
  }
  std::int64_t repeat = 1;
  if (j.contains("repeat")) {
    if (!j["repeat"].is_number_integer() || j["repeat"].get<std::int64_t>() < 1) {
      throw Error(Errc::invalid_input, "\"repeat\" must be a positive integer");
    }
    repeat = j["repeat"].get<std::int64_t>();
  }
  if (static_cast<std::uint64_t>(repeat) * base.size() > kMaxSequenceLength) {
    throw Error(Errc::invalid_input, "sequence length exceeds " + std::to_string(kMaxSequenceLength));
  }
  std::vector<GroupElement> all;
  for (std::int64_t r = 0; r < repeat; ++r) all.insert(all.end(), base.begin(), base.end());
  std::optional<std::int64_t> k;
  if (j.contains("K")) {
    if (!j["K"].is_number_integer() || j["K"].get<std::int64_t>() < 1) {
      throw Error(Errc::invalid_input, "\"K\" must be a positive integer");
    }
    k = j["K"].get<std::int64_t>();
  }
  return SignedSequence(std::move(all), k);
}

SignedSequence load_sequence(const std::filesystem::path& path, const group::Ambient& ambient,
                             const FiniteGroup* group) {
  return parse_sequence(group::read_json_file(path), ambient, group);
}

nlohmann::json sequence_to_json(const SignedSequence& seq) {
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& g : seq.elements()) elems.push_back(group::element_to_json(g));
  nlohmann::json j{{"elements", elems}};
  if (seq.max_abs_entry()) j["K"] = *seq.max_abs_entry();
  return j;
}

nlohmann::json distribution_to_json(const FiniteGroup& group, const ExactDistribution& dist) {
  nlohmann::json entries = nlohmann::json::array();
  for (ElementIndex g : dist.support()) {
    entries.push_back({{"element", group::encoding_to_json(group.words(g))}, {"count", dist.counts[g].get_str()}});
  }
  return {{"denom_exp", dist.denom_exp}, {"distribution", entries}};
}

nlohmann::json rational_to_json(const DyadicRational& r) {
  return {{"count", r.numerator.get_str()}, {"denom_exp", r.denom_exp}};
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "n,rho_count,rho_denom_exp,rho,loe_bound,theorem_141_bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.rho.numerator.get_str() << ',' << r.rho.denom_exp << ',' << r.rho.to_double() << ','
        << r.loe << ',';
    if (!std::isnan(r.theorem_141)) out << r.theorem_141;  // empty below n = 2
    out << '\n';
  }
  out.precision(old);
}

}  // namespace anticonc::walk
