#include "anticonc/group/group_io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "anticonc/group/catalog.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::group {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const std::set<std::string>& required) {
  if (!j.is_object()) throw Error(Errc::invalid_input, "expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw Error(Errc::invalid_input, "unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw Error(Errc::invalid_input, "missing key '" + key + "'");
  }
}

std::vector<std::vector<std::int64_t>> parse_rows(const json& j, std::uint32_t m) {
  if (!j.is_array() || j.size() != m) throw Error(Errc::invalid_input, "matrix must have m rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != m) throw Error(Errc::invalid_input, "matrix row must have m entries");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(Errc::invalid_input, "matrix entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

GroupSpec named_spec(const json& j) {
  require_keys(j, {"kind", "name", "n", "q"}, {"kind", "name"});
  const auto name = j.at("name").get<std::string>();
  auto n_param = [&] {
    if (!j.contains("n")) throw Error(Errc::invalid_input, "named group '" + name + "' needs 'n'");
    return j.at("n").get<std::uint32_t>();
  };
  std::vector<GroupElement> gens;
  if (name == "cyclic") {
    gens = catalog::cyclic(n_param());
  } else if (name == "symmetric") {
    gens = catalog::symmetric(n_param());
  } else if (name == "alternating") {
    gens = catalog::alternating(n_param());
  } else if (name == "dihedral") {
    gens = catalog::dihedral(n_param());
  } else if (name == "Q8") {
    gens = catalog::quaternion();
  } else if (name == "SL2") {
    if (!j.contains("q")) throw Error(Errc::invalid_input, "SL2 needs 'q'");
    const auto q = j.at("q").get<std::uint32_t>();
    std::uint32_t root = 2;
    while (root * root < q) ++root;
    if (root * root == q && q > 4) {
      gens = catalog::sl2_prime_square(root);
    } else {
      gens = catalog::sl2(q);
    }
  } else {
    throw Error(Errc::invalid_input, "unknown named group '" + name + "'");
  }
  return {gens.front().ambient(), gens};
}

}  // namespace

GroupElement parse_element(const Ambient& ambient, const json& j) {
  switch (ambient.kind()) {
    case ElementKind::matrix_mod_p: {
      auto g = GroupElement::matrix(ambient.prime(), parse_rows(j, ambient.matrix_size()));
      return g;
    }
    case ElementKind::permutation: {
      if (!j.is_array() || j.size() != ambient.degree()) {
        throw Error(Errc::invalid_input, "permutation must list 'degree' images");
      }
      return GroupElement::permutation(j.get<std::vector<Word>>());
    }
    case ElementKind::table: {
      if (!j.is_object() || !j.contains("table")) throw Error(Errc::invalid_input, "table element must be {\"table\": k}");
      return GroupElement::table_element(ambient, j.at("table").get<Word>());
    }
  }
  throw Error(Errc::invalid_input, "unsupported element kind");
}

GroupSpec parse_group_spec(const json& j) {
  try {
    if (!j.is_object() || !j.contains("kind")) throw Error(Errc::invalid_input, "group spec needs 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "matrix_mod_p") {
      require_keys(j, {"kind", "p", "m", "generators"}, {"kind", "p", "m", "generators"});
      const auto p = j.at("p").get<std::uint32_t>();
      const auto m = j.at("m").get<std::uint32_t>();
      Ambient amb = Ambient::matrix_mod_p(p, m);
      GroupSpec spec{amb, {}};
      for (const auto& g : j.at("generators")) spec.generators.push_back(parse_element(amb, g));
      if (spec.generators.empty()) throw Error(Errc::invalid_input, "need at least one generator");
      return spec;
    }
    if (kind == "permutation") {
      require_keys(j, {"kind", "degree", "generators"}, {"kind", "degree", "generators"});
      Ambient amb = Ambient::permutation(j.at("degree").get<std::uint32_t>());
      GroupSpec spec{amb, {}};
      for (const auto& g : j.at("generators")) spec.generators.push_back(parse_element(amb, g));
      if (spec.generators.empty()) throw Error(Errc::invalid_input, "need at least one generator");
      return spec;
    }
    if (kind == "table") {
      require_keys(j, {"kind", "size", "table", "generators"}, {"kind", "size", "table"});
      const auto k = j.at("size").get<std::uint32_t>();
      const auto& rows = j.at("table");
      if (!rows.is_array() || rows.size() != k) throw Error(Errc::invalid_input, "table must have 'size' rows");
      std::vector<Word> products;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != k) throw Error(Errc::invalid_input, "table row must have 'size' entries");
        for (const auto& v : row) products.push_back(v.get<Word>());
      }
      Ambient amb = Ambient::table(k, std::move(products));
      GroupSpec spec{amb, {}};
      if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) spec.generators.push_back(GroupElement::table_element(amb, g.get<Word>()));
      } else {
        for (Word i = 0; i < k; ++i) spec.generators.push_back(GroupElement::table_element(amb, i));
      }
      if (spec.generators.empty()) throw Error(Errc::invalid_input, "need at least one generator");
      return spec;
    }
    if (kind == "named") return named_spec(j);
    throw Error(Errc::invalid_input, "unknown group kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("malformed group spec: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_input, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, "invalid JSON in " + path.string() + ": " + e.what());
  }
}

GroupSpec load_group_spec(const std::filesystem::path& path) { return parse_group_spec(read_json_file(path)); }

json encoding_to_json(std::span<const Word> words) { return json(std::vector<Word>(words.begin(), words.end())); }

json element_to_json(const GroupElement& g) {
  const auto& amb = g.ambient();
  const auto w = g.words();
  switch (amb.kind()) {
    case ElementKind::matrix_mod_p: {
      json rows = json::array();
      const auto m = amb.matrix_size();
      for (std::uint32_t r = 0; r < m; ++r) {
        rows.push_back(std::vector<Word>(w.begin() + r * m, w.begin() + (r + 1) * m));
      }
      return rows;
    }
    case ElementKind::permutation: return encoding_to_json(w);
    case ElementKind::table: return json{{"table", w[0]}};
  }
  return json();
}

}  // namespace anticonc::group
