#include <string>

#include "anticonc/embed/embed.hpp"
#include "anticonc/group/group_io.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::embed {

namespace {

mpq_class parse_entry(const nlohmann::json& e) {
  if (e.is_number_integer()) return mpq_class(std::to_string(e.get<std::int64_t>()));
  if (!e.is_string()) throw Error(Errc::invalid_input, "matrix entries must be integers or \"num/den\" strings");
  const auto s = e.get<std::string>();
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(Errc::invalid_input, "bad rational entry: " + s);
  if (q.get_den() == 0) throw Error(Errc::invalid_input, "zero denominator: " + s);
  q.canonicalize();
  return q;
}


}  // namespace

RationalMatrix parse_matrix(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::invalid_input, "matrix must be a list of rows");
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(Errc::invalid_input, "matrix row must be a list");
    std::vector<mpq_class> r;
    for (const auto& e : row) r.push_back(parse_entry(e));
    rows.push_back(std::move(r));
  }
  return RationalMatrix(std::move(rows));
}

std::vector<RationalMatrix> parse_matrices(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key != "matrices" && key != "n" && key != "p_min") throw Error(Errc::invalid_input, "unknown key: " + key);
    }
    if (!j.contains("matrices")) throw Error(Errc::invalid_input, "missing \"matrices\"");
    list = &j["matrices"];
  }
  if (!list->is_array() || list->empty()) throw Error(Errc::invalid_input, "\"matrices\" must be a non-empty list");
  std::vector<RationalMatrix> out;
  for (const auto& m : *list) out.push_back(parse_matrix(m));
  return out;
}

nlohmann::json bad_prime_set_to_json(const BadPrimeSet& bad) {
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& bp : bad.primes) primes.push_back({{"prime", bp.prime.get_str()}, {"reasons", bp.reasons}});
  nlohmann::json unfactored = nlohmann::json::array();
  for (const auto& [label, c] : bad.unfactored) unfactored.push_back({{"source", label}, {"cofactor", c.get_str()}});
  nlohmann::json orders = nlohmann::json::array();
  for (std::size_t i = 0; i < bad.orders.size(); ++i) {
    const auto& o = bad.orders[i];
    orders.push_back({{"order", o.order ? nlohmann::json(*o.order) : nlohmann::json("infinite")},
                      {"power_cap_hit", o.power_cap_hit},
                      {"d", bad.d[i]}});
  }
  return {{"bad_primes", primes}, {"unfactored", unfactored}, {"inputs", orders}};
}

nlohmann::json embedding_to_json(const EmbeddingResult& result) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& g : result.images) images.push_back(group::element_to_json(g));
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) {
    reports.push_back({{"original_order", r.original_order ? nlohmann::json(*r.original_order) : nlohmann::json("infinite")},
                       {"power_cap_hit", r.power_cap_hit},
                       {"image_order", r.image_order ? nlohmann::json(*r.image_order) : nlohmann::json("exceeds cap")},
                       {"clause", r.clause},
                       {"satisfied", r.satisfied}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& [p, why] : result.skipped) skipped.push_back({{"prime", p}, {"reason", why}});
  nlohmann::json j = bad_prime_set_to_json(result.bad);
  j["p"] = result.p;
  j["images"] = images;
  j["reports"] = reports;
  j["skipped_primes"] = skipped;
  return j;
}

}  // namespace anticonc::embed
