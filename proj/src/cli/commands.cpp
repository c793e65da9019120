#include "anticonc/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "anticonc/charrep/character_table.hpp"
#include "anticonc/charrep/fourier.hpp"
#include "anticonc/charrep/irreps.hpp"
#include "anticonc/charrep/multiplicity.hpp"
#include "anticonc/embed/embed.hpp"
#include "anticonc/group/finite_group.hpp"
#include "anticonc/group/group_io.hpp"
#include "anticonc/spectral/diagnostics.hpp"
#include "anticonc/spectral/properties.hpp"
#include "anticonc/util/error.hpp"
#include "anticonc/walk/bounds.hpp"
#include "anticonc/walk/exact.hpp"
#include "anticonc/walk/monte_carlo.hpp"
#include "anticonc/walk/sequence_io.hpp"

namespace anticonc::cli {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::invalid_input, "config key \"" + key + "\" has the wrong type");
  }
}

std::uint64_t get_u64(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(Errc::invalid_input, "config key \"" + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

const std::filesystem::path& require(const std::optional<std::filesystem::path>& p, const char* flag) {
  if (!p) throw Error(Errc::invalid_input, std::string("missing --") + flag);
  return *p;
}

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw Error(Errc::invalid_input, std::string("missing --") + flag);
  return *v;
}

struct Loaded {
  group::GroupSpec spec;
  std::optional<group::FiniteGroup> group;  // empty when closure hit the cap
};

Loaded load_group(const RunConfig& c, bool allow_cap) {
  Loaded l{group::load_group_spec(require(c.group, "group")), std::nullopt};
  try {
    l.group = group::FiniteGroup::close(l.spec.generators, c.cap);
  } catch (const Error& e) {
    if (e.code() != Errc::cap_exceeded || !allow_cap) throw;
  }
  return l;
}

// Index entries need the enumeration; inline elements do not.
walk::SignedSequence load_seq_raw(const RunConfig& c, const group::GroupSpec& spec) {
  const auto raw = group::read_json_file(require(c.seq, "seq"));
  const bool has_index = raw.is_object() && raw.contains("elements") && raw["elements"].is_array() &&
                         std::any_of(raw["elements"].begin(), raw["elements"].end(),
                                     [](const json& e) { return e.is_number_integer(); });
  std::optional<group::FiniteGroup> g;
  if (has_index) g = group::FiniteGroup::close(spec.generators, c.cap);
  return walk::parse_sequence(raw, spec.ambient, g ? &*g : nullptr);
}

walk::SignedSequence load_seq(const RunConfig& c, const Loaded& l) {
  return walk::load_sequence(require(c.seq, "seq"), l.spec.ambient, l.group ? &*l.group : nullptr);
}

json element_json(const group::FiniteGroup& g, group::ElementIndex i) {
  return {{"index", i}, {"element", group::encoding_to_json(g.words(i))}};
}

json bounds_json(const walk::SignedSequence& seq, const group::Ambient& ambient) {
  const auto n = static_cast<unsigned>(seq.length());
  const std::uint64_t s = seq.min_order();
  json b;
  b["loe"] = walk::rational_to_json(walk::loe_binomial_bound(n));
  b["loe_value"] = walk::loe_binomial_bound(n).to_double();
  if (s >= 2 && n >= 2) {
    const auto t = walk::theorem_bound(s, n);
    b["theorem_141"] = {{"value", t.value}, {"vacuous", t.vacuous}};
    if (ambient.kind() == group::ElementKind::matrix_mod_p) {
      const auto m3 = walk::main3_bound(ambient.prime(), s, n);
      b["main3"] = {{"value", m3.value}, {"vacuous", m3.vacuous}, {"p", ambient.prime()}};
    } else {
      b["main3"] = nullptr;
    }
  } else {
    b["theorem_141"] = nullptr;
    b["main3"] = nullptr;
    b["note"] = "theorem bounds need s >= 2 and n >= 2";
  }
  return b;
}

json mc_json(const walk::MonteCarloResult& mc) {
  return {{"samples", mc.samples},
          {"max_count", mc.max_count},
          {"plug_in_max_frequency", mc.plug_in_max_frequency},
          {"distinct_products", mc.distinct_products},
          {"standard_error", mc.standard_error},
          {"argmax_element", group::encoding_to_json(mc.argmax_encoding)},
          {"estimator", "plug-in (biased upward for the supremum)"}};
}

void write_text(const std::optional<std::filesystem::path>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw Error(Errc::invalid_input, "cannot write " + path->string());
  f << text;
}

}  // namespace

void apply_config_json(RunConfig& c, const json& j) {
  if (!j.is_object()) throw Error(Errc::invalid_input, "config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "group") c.group = get_as<std::string>(v, key);
    else if (key == "seq") c.seq = get_as<std::string>(v, key);
    else if (key == "input") c.input = get_as<std::string>(v, key);
    else if (key == "out") c.out = get_as<std::string>(v, key);
    else if (key == "dist_out") c.dist_out = get_as<std::string>(v, key);
    else if (key == "seed") c.seed = get_u64(v, key);
    else if (key == "samples") c.samples = get_u64(v, key);
    else if (key == "tol") c.tol = get_as<double>(v, key);
    else if (key == "cap") c.cap = get_u64(v, key);
    else if (key == "threads") c.threads = static_cast<unsigned>(get_u64(v, key));
    else if (key == "format") c.format = get_as<std::string>(v, key);
    else if (key == "alpha") c.alpha = get_as<double>(v, key);
    else if (key == "n") c.n = get_u64(v, key);
    else if (key == "p") c.p = get_u64(v, key);
    else if (key == "s") c.s = get_u64(v, key);
    else if (key == "m") c.m = get_u64(v, key);
    else if (key == "p_min") c.p_min = get_u64(v, key);
    else if (key == "K") c.k_bound = get_u64(v, key);
    else if (key == "b") c.b_index = get_u64(v, key);
    else if (key == "irrep") c.irrep_index = get_u64(v, key);
    else if (key == "draws") c.draws = get_u64(v, key);
    else if (key == "grid_step") c.grid_step = get_as<double>(v, key);
    else if (key == "dump_irreps") c.dump_irreps = get_as<bool>(v, key);
    else throw Error(Errc::invalid_input, "unknown config key: " + key);
  }
  validate(c);
}

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw Error(Errc::invalid_input, "tol must be positive");
  if (!(c.grid_step > 0.0)) throw Error(Errc::invalid_input, "grid_step must be positive");
  if (c.alpha && !(*c.alpha > 0.0)) throw Error(Errc::invalid_input, "alpha must be positive");
  if (c.format != "json" && c.format != "csv") throw Error(Errc::invalid_input, "format must be json or csv");
  if (c.threads == 0) throw Error(Errc::invalid_input, "threads must be >= 1");
  if (c.cap == 0) throw Error(Errc::invalid_input, "cap must be >= 1");
}

CommandResult cmd_order(const RunConfig& c) {
  const auto spec = group::load_group_spec(require(c.group, "group"));
  std::vector<group::GroupElement> elems;
  if (c.seq) {
    elems = load_seq_raw(c, spec).elements();
  } else {
    elems = spec.generators;
  }
  json rows = json::array();
  std::uint64_t smin = 0;
  for (const auto& g : elems) {
    const auto o = group::raw_order(g);
    smin = smin == 0 ? o : std::min(smin, o);
    rows.push_back({{"element", group::element_to_json(g)}, {"order", o}});
  }
  json out{{"orders", rows}, {"s", smin}};
  if (c.s) {
    std::size_t count = 0;
    for (const auto& r : rows) count += r["order"].get<std::uint64_t>() >= *c.s ? 1 : 0;
    out["N"] = {{"sigma", *c.s}, {"count", count}};
  }
  out["n"] = elems.size();
  return {kPass, out, std::nullopt};
}

CommandResult cmd_closure(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto& g = *l.group;
  const auto classes = group::conjugacy_classes(g);
  const auto z = group::center(g);
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, std::size_t> order_counts;
  for (group::ElementIndex i = 0; i < g.order(); ++i) {
    const auto o = group::element_order(g, i);
    ++order_counts[o];
  }
  for (const auto& [o, cnt] : order_counts) exponent = std::lcm(exponent, o);
  json orders = json::object();
  for (const auto& [o, cnt] : order_counts) orders[std::to_string(o)] = cnt;
  json gens = json::array();
  for (auto i : g.generators()) gens.push_back(i);
  return {kPass,
          {{"order", g.order()},
           {"generators", gens},
           {"class_count", classes.count()},
           {"class_sizes", classes.sizes},
           {"center", z},
           {"exponent", exponent},
           {"element_orders", orders}},
          std::nullopt};
}

CommandResult cmd_rho(const RunConfig& c) {
  const auto l = load_group(c, true);
  const auto seq = load_seq(c, l);
  json out;
  out["n"] = seq.length();
  out["s"] = seq.min_order();
  out["bounds"] = bounds_json(seq, l.spec.ambient);
  if (l.group) {
    const auto& g = *l.group;
    const auto idx = seq.resolve(g);
    if (c.dist_out) {
      const auto dist = walk::exact_distribution(g, idx, c.threads);
      write_text(c.dist_out, walk::distribution_to_json(g, dist).dump(2) + "\n");
    }
    const auto r = walk::rho_exact(g, idx, c.threads);
    out["method"] = "exact";
    out["group_order"] = g.order();
    out["rho_exact"] = walk::rational_to_json(r.rational());
    out["rho"] = r.value();
    json maxs = json::array();
    for (auto b : r.maximizers) maxs.push_back(element_json(g, b));
    out["maximizers"] = maxs;
    out["torsion_lower_bound_holds"] = r.rational().at_least_reciprocal(seq.min_order());
  } else {
    const auto mc = walk::rho_monte_carlo(seq, c.samples, c.seed, c.threads);
    out["method"] = "monte_carlo";
    out["rho_mc"] = mc_json(mc);
    out["rho"] = mc.plug_in_max_frequency;
    out["maximizers"] = json::array({{{"element", group::encoding_to_json(mc.argmax_encoding)}}});
  }
  return {kPass, out, std::nullopt};
}

CommandResult cmd_mc(const RunConfig& c) {
  const auto spec = group::load_group_spec(require(c.group, "group"));
  const auto seq = load_seq_raw(c, spec);
  const auto mc = walk::rho_monte_carlo(seq, c.samples, c.seed, c.threads);
  return {kPass, {{"method", "monte_carlo"}, {"n", seq.length()}, {"seed", c.seed}, {"rho_mc", mc_json(mc)}}, std::nullopt};
}

CommandResult cmd_chartab(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto table = charrep::character_table_dixon(*l.group);
  const auto rep = charrep::check_orthogonality(table);
  json out = charrep::character_table_to_json(*l.group, table);
  out["checks"] = {{"row_defect", rep.row_defect},
                   {"column_defect", rep.column_defect},
                   {"degree_square_sum", rep.degree_square_sum},
                   {"degree_rounding", rep.degree_rounding}};
  const auto ga = charrep::max_character_ratio(table);
  out["max_ratio_noncentral"] = ga ? json(ga->value) : json("no nonlinear characters");
  const bool ok = rep.row_defect <= c.tol && rep.degree_square_sum == l.group->order();
  return {ok ? kPass : kVerificationFailure, out, std::nullopt};
}

CommandResult cmd_irreps(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto& g = *l.group;
  const auto irreps = charrep::decompose_regular(g, c.seed);
  json list = json::array();
  bool ok = true;
  for (const auto& r : irreps) {
    const auto chk = charrep::check_irrep(g, r, 200, c.seed);
    ok = ok && chk.unitarity <= 1e-8 && chk.homomorphism <= 1e-7 && chk.irreducibility <= 1e-6;
    json item{{"dim", r.dim},
              {"unitarity_defect", chk.unitarity},
              {"homomorphism_defect", chk.homomorphism},
              {"irreducibility_defect", chk.irreducibility}};
    json chi = json::array();
    for (const auto& v : r.character) chi.push_back({v.real(), v.imag()});
    item["character"] = chi;
    if (c.dump_irreps) {
      json mats = json::array();
      for (group::ElementIndex e = 0; e < g.order(); ++e) {
        json m = json::array();
        for (std::size_t i = 0; i < r.dim; ++i) {
          json row = json::array();
          for (std::size_t k = 0; k < r.dim; ++k) {
            const auto z = r.block(e)[i * r.dim + k];
            row.push_back({z.real(), z.imag()});
          }
          m.push_back(row);
        }
        mats.push_back(m);
      }
      item["matrices"] = mats;
    }
    list.push_back(item);
  }
  const auto sum = charrep::dimension_square_sum(irreps);
  ok = ok && sum == g.order();
  return {ok ? kPass : kVerificationFailure,
          {{"group_order", g.order()}, {"dimension_square_sum", sum}, {"irreps", list}},
          std::nullopt};
}

CommandResult cmd_fourier_check(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto& g = *l.group;
  const auto seq = load_seq(c, l);
  const auto idx = seq.resolve(g);
  const auto irreps = charrep::decompose_regular(g, c.seed);
  const auto fourier = charrep::fourier_distribution(g, irreps, idx, c.threads);
  const auto exact = walk::exact_distribution(g, idx, c.threads);
  double dev = 0.0, total = 0.0;
  for (group::ElementIndex b = 0; b < g.order(); ++b) {
    dev = std::max(dev, std::abs(fourier[b] - exact.probability(b)));
    total += fourier[b];
  }
  const bool ok = dev <= c.tol;
  return {ok ? kPass : kVerificationFailure,
          {{"group_order", g.order()},
           {"n", idx.size()},
           {"max_abs_deviation", dev},
           {"fourier_total_probability", total},
           {"tolerance", c.tol},
           {"pass", ok}},
          std::nullopt};
}

CommandResult cmd_mult_bounds(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto table = charrep::character_table_dixon(*l.group);
  const auto ga = charrep::max_character_ratio(table);
  double alpha = 0.0;
  json out;
  if (c.alpha) {
    alpha = *c.alpha;
  } else if (ga) {
    alpha = ga->value;
    out["alpha_source"] = "max ratio from the table";
  } else {
    alpha = 0.5;
  }
  if (alpha >= 1.0) throw Error(Errc::invalid_input, "alpha must lie in (0, 1)");
  const auto rep = charrep::check_multiplicity_bounds(table, *l.group, alpha);
  out["report"] = charrep::multiplicity_report_to_json(rep);
  out["max_ratio_noncentral"] = ga ? json(ga->value) : json("no nonlinear characters");
  out["degree_square_sum"] = charrep::check_orthogonality(table).degree_square_sum;
  return {rep.violated == 0 ? kPass : kVerificationFailure, out, std::nullopt};
}

CommandResult cmd_svd_props(const RunConfig& c) {
  spectral::PropertySuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.pairs = c.draws;
  cfg.grid_step = c.grid_step;
  const auto rep = spectral::run_property_suites(cfg);
  return {rep.pass() ? kPass : kVerificationFailure, spectral::property_report_to_json(rep), std::nullopt};
}

CommandResult cmd_diag(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto& g = *l.group;
  const auto seq = load_seq(c, l);
  const auto idx = seq.resolve(g);
  const auto irreps = charrep::decompose_regular(g, c.seed);
  std::size_t which = 0;
  if (c.irrep_index) {
    which = *c.irrep_index;
    if (which >= irreps.size()) throw Error(Errc::invalid_input, "irrep index out of range");
  } else {
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      if (irreps[i].dim > irreps[which].dim) which = i;
    }
  }
  const bool matrix = l.spec.ambient.kind() == group::ElementKind::matrix_mod_p;
  const std::uint64_t p = c.p ? *c.p : (matrix ? l.spec.ambient.prime() : require(c.p, "p"));
  const std::uint64_t m = c.m ? *c.m : (matrix ? l.spec.ambient.matrix_size() : require(c.m, "m"));
  const std::uint64_t s = c.s.value_or(seq.min_order());
  const auto b = static_cast<group::ElementIndex>(c.b_index.value_or(0));
  const auto dg = spectral::proof_diagnostics(g, p, m, s, irreps[which], idx, b);
  const int code = dg.for_s6_all_hold ? kPass : kVerificationFailure;
  if (c.format == "csv") {
    std::ostringstream os;
    spectral::write_diagnostics_csv(os, dg);
    return {code, json(), os.str()};
  }
  json out = spectral::diagnostics_to_json(dg);
  out["irrep_index"] = which;
  return {code, out, std::nullopt};
}

CommandResult cmd_embed(const RunConfig& c) {
  const auto raw = group::read_json_file(require(c.input, "input"));
  const auto mats = embed::parse_matrices(raw);
  std::optional<std::uint64_t> n = c.n;
  std::optional<std::uint64_t> p_min = c.p_min;
  if (!n && raw.is_object() && raw.contains("n")) n = raw["n"].get<std::uint64_t>();
  if (!p_min && raw.is_object() && raw.contains("p_min")) p_min = raw["p_min"].get<std::uint64_t>();
  const auto r = embed::embed_mod_p(mats, require(n, "n"), p_min);
  return {kPass, embed::embedding_to_json(r), std::nullopt};
}

CommandResult cmd_bounds(const RunConfig& c) {
  const std::uint64_t n = require(c.n, "n");
  json out;
  out["n"] = n;
  out["loe"] = walk::rational_to_json(walk::loe_binomial_bound(static_cast<unsigned>(n)));
  out["loe_value"] = walk::loe_binomial_bound(static_cast<unsigned>(n)).to_double();
  if (c.s) {
    const auto t = walk::theorem_bound(*c.s, n);
    out["theorem_141"] = {{"value", t.value}, {"vacuous", t.vacuous}};
    if (c.p) {
      const auto m3 = walk::main3_bound(*c.p, *c.s, n);
      out["main3"] = {{"value", m3.value}, {"vacuous", m3.vacuous}};
    }
  }
  return {kPass, out, std::nullopt};
}

CommandResult cmd_example2(const RunConfig& c) {
  std::vector<std::int64_t> a;
  if (c.input) {
    const auto raw = group::read_json_file(*c.input);
    const json& list = raw.is_object() ? raw.at("a") : raw;
    for (const auto& v : list) a.push_back(v.get<std::int64_t>());
  } else {
    const std::uint64_t n = require(c.n, "n");
    const auto k = static_cast<std::int64_t>(require(c.k_bound, "K"));
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::int64_t> mag(1, k);
    std::bernoulli_distribution neg(0.5);
    for (std::uint64_t i = 0; i < n; ++i) a.push_back(neg(rng) ? -mag(rng) : mag(rng));
  }
  std::optional<std::int64_t> k;
  if (c.k_bound) k = static_cast<std::int64_t>(*c.k_bound);
  const auto r = walk::example2_check(a, k);
  json out{{"n", r.n},
           {"K", r.k_bound},
           {"a", a},
           {"rho", walk::rational_to_json({r.max_count, r.n})},
           {"rho_value", r.rho},
           {"maximizers", r.maximizers},
           {"lower_bound", r.lower_bound},
           {"pass", r.pass}};
  return {r.pass ? kPass : kVerificationFailure, out, std::nullopt};
}

CommandResult cmd_sweep(const RunConfig& c) {
  const auto l = load_group(c, false);
  const auto& g = *l.group;
  const auto seq = load_seq(c, l);
  const auto idx = seq.resolve(g);
  const auto rows = walk::rho_prefix_sweep(g, idx, c.threads);
  std::vector<walk::SweepRow> out_rows;
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto o = seq.orders()[k];
    s = s == 0 ? o : std::min(s, o);
    walk::SweepRow r;
    r.n = static_cast<unsigned>(k + 1);
    r.rho = rows[k].rational();
    r.loe = walk::loe_binomial_bound(r.n).to_double();
    r.theorem_141 = (s >= 2 && r.n >= 2) ? walk::theorem_bound(s, r.n).value : std::nan("");
    out_rows.push_back(r);
  }
  if (c.format == "csv") {
    std::ostringstream os;
    walk::write_sweep_csv(os, out_rows);
    return {kPass, json(), os.str()};
  }
  json arr = json::array();
  for (const auto& r : out_rows) {
    arr.push_back({{"n", r.n},
                   {"rho", walk::rational_to_json(r.rho)},
                   {"rho_value", r.rho.to_double()},
                   {"loe", r.loe},
                   {"theorem_141", std::isnan(r.theorem_141) ? json(nullptr) : json(r.theorem_141)}});
  }
  return {kPass, {{"rows", arr}}, std::nullopt};
}

int run_command(const std::string& name, const RunConfig& config) {
  using Fn = CommandResult (*)(const RunConfig&);
  static const std::map<std::string, Fn> table{
      {"order", cmd_order},     {"closure", cmd_closure},         {"rho", cmd_rho},
      {"mc", cmd_mc},           {"chartab", cmd_chartab},         {"irreps", cmd_irreps},
      {"fourier-check", cmd_fourier_check}, {"mult-bounds", cmd_mult_bounds}, {"svd-props", cmd_svd_props},
      {"diag", cmd_diag},       {"embed", cmd_embed},             {"bounds", cmd_bounds},
      {"example2", cmd_example2}, {"sweep", cmd_sweep}};
  const auto it = table.find(name);
  if (it == table.end()) {
    std::cerr << "unknown command: " << name << "\n";
    return kInputError;
  }
  try {
    validate(config);
    const auto result = it->second(config);
    write_text(config.out, result.csv ? *result.csv : result.json.dump(2) + "\n");
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::cap_exceeded:
      case Errc::size_cap:
      case Errc::power_cap_exceeded:
        return kResourceCap;
      case Errc::verification_failed:
        return kVerificationFailure;
      default:
        return kInputError;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace anticonc::cli
