// anticonc: command-line front end. Flags map one-to-one onto RunConfig;
// --config loads a JSON object first and explicit flags override it.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anticonc/cli/commands.hpp"
#include "anticonc/group/group_io.hpp"
#include "anticonc/util/error.hpp"

namespace {

using anticonc::cli::RunConfig;

struct Flags {
  std::string config, group, seq, input, out, dist_out, format;
  std::uint64_t seed = 0, samples = 0, cap = 0, draws = 0;
  std::uint64_t n = 0, p = 0, s = 0, m = 0, p_min = 0, k_bound = 0, b = 0, irrep = 0;
  unsigned threads = 0;
  double tol = 0.0, alpha = 0.0, h = 0.0;
  bool dump_irreps = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON file with RunConfig keys");
  sub->add_option("--group", f.group, "group spec (JSON)");
  sub->add_option("--seq", f.seq, "sequence spec (JSON)");
  sub->add_option("--input", f.input, "command input (matrices, integer list)");
  sub->add_option("--out", f.out, "output path, default stdout");
  sub->add_option("--dist-out", f.dist_out, "write the exact distribution here (rho)");
  sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", f.seed, "64-bit seed");
  sub->add_option("--samples", f.samples, "Monte Carlo samples");
  sub->add_option("--tol", f.tol, "tolerance");
  sub->add_option("--cap", f.cap, "closure cap");
  sub->add_option("--threads", f.threads, "worker threads");
  sub->add_option("--alpha", f.alpha, "character ratio bound");
  sub->add_option("--n", f.n, "length");
  sub->add_option("--p", f.p, "prime");
  sub->add_option("--s", f.s, "minimum order");
  sub->add_option("--m", f.m, "matrix size");
  sub->add_option("--p-min", f.p_min, "smallest prime to try");
  sub->add_option("--K", f.k_bound, "bound on |a_i|");
  sub->add_option("--b", f.b, "element index of B");
  sub->add_option("--irrep", f.irrep, "irrep index");
  sub->add_option("--draws", f.draws, "random pairs for property suites");
  sub->add_option("--grid-step", f.h, "grid step for the trigonometric check");
  sub->add_flag("--dump-irreps", f.dump_irreps, "include representation matrices");
}

RunConfig build_config(const CLI::App* sub, const Flags& f) {
  RunConfig c;
  if (!f.config.empty()) anticonc::cli::apply_config_json(c, anticonc::group::read_json_file(f.config));
  auto set = [sub](const char* name) { return sub->count(name) > 0; };
  if (set("--group")) c.group = f.group;
  if (set("--seq")) c.seq = f.seq;
  if (set("--input")) c.input = f.input;
  if (set("--out")) c.out = f.out;
  if (set("--dist-out")) c.dist_out = f.dist_out;
  if (set("--format")) c.format = f.format;
  if (set("--seed")) c.seed = f.seed;
  if (set("--samples")) c.samples = f.samples;
  if (set("--tol")) c.tol = f.tol;
  if (set("--cap")) c.cap = f.cap;
  if (set("--threads")) c.threads = f.threads;
  if (set("--alpha")) c.alpha = f.alpha;
  if (set("--n")) c.n = f.n;
  if (set("--p")) c.p = f.p;
  if (set("--s")) c.s = f.s;
  if (set("--m")) c.m = f.m;
  if (set("--p-min")) c.p_min = f.p_min;
  if (set("--K")) c.k_bound = f.k_bound;
  if (set("--b")) c.b_index = f.b;
  if (set("--irrep")) c.irrep_index = f.irrep;
  if (set("--draws")) c.draws = f.draws;
  if (set("--grid-step")) c.grid_step = f.h;
  if (set("--dump-irreps")) c.dump_irreps = f.dump_irreps;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-concentration of random signed products in finite groups"};
  app.require_subcommand(1);
  const std::map<std::string, std::string> commands{
      {"order", "element orders and s for a sequence"},
      {"closure", "enumerate the group; order, classes, center"},
      {"rho", "rho of the signed product, exact or Monte Carlo"},
      {"mc", "Monte Carlo estimate of rho"},
      {"chartab", "character table"},
      {"irreps", "unitary irreducible representations"},
      {"fourier-check", "trace identity against the exact distribution"},
      {"mult-bounds", "eigenvalue multiplicity bounds"},
      {"svd-props", "singular value property suites"},
      {"diag", "proof-quantity diagnostics for one irrep"},
      {"embed", "reduce rational matrices mod a good prime"},
      {"bounds", "closed-form bounds"},
      {"example2", "integer signed-sum lower bound"},
      {"sweep", "rho of every prefix"}};
  Flags flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_flags(sub, flags);
    subs[name] = sub;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : anticonc::cli::kInputError;
  }
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      return anticonc::cli::run_command(name, build_config(sub, flags));
    } catch (const anticonc::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return anticonc::cli::kInputError;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: malformed JSON: " << e.what() << "\n";
      return anticonc::cli::kInputError;
    }
  }
  return anticonc::cli::kInputError;
}
