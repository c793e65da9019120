#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "anticonc/cli/commands.hpp"
#include "anticonc/util/error.hpp"
#include "oracles.hpp"

using namespace anticonc;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path write_json(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "anticonc_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

cli::RunConfig config(const std::string& group, const std::string& seq) {
  cli::RunConfig c;
  c.group = write_json("group.json", group);
  if (!seq.empty()) c.seq = write_json("seq.json", seq);
  return c;
}

}  // namespace

TEST_CASE("rho: all-equal high order sequence") {
  auto c = config(R"({"kind":"matrix_mod_p","p":11,"m":2,"generators":[[[1,1],[0,1]]]})",
                  R"({"elements":[[[1,1],[0,1]]],"repeat":9})");
  const auto r = cli::cmd_rho(c);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.json["method"] == "exact");
  CHECK(r.json["rho_exact"]["count"] == "126");
  CHECK(r.json["rho_exact"]["denom_exp"] == 9);
  CHECK(r.json["bounds"]["theorem_141"]["vacuous"] == true);
  CHECK(r.json["bounds"].contains("main3"));
}

TEST_CASE("rho: order-2 sequence is a point mass") {
  auto c = config(R"({"kind":"permutation","degree":2,"generators":[[1,0]]})", R"({"elements":[[1,0]],"repeat":5})");
  const auto r = cli::cmd_rho(c);
  CHECK(r.json["rho"] == 1.0);
  CHECK(r.json["bounds"]["theorem_141"]["vacuous"] == true);
}

TEST_CASE("rho: falls back to Monte Carlo past the cap") {
  auto c = config(R"({"kind":"named","name":"SL2","q":7})", R"({"elements":[[[1,1],[0,1]],[[0,6],[1,0]]],"repeat":3})");
  c.cap = 50;
  c.samples = 2000;
  const auto r = cli::cmd_rho(c);
  CHECK(r.json["method"] == "monte_carlo");
  CHECK(r.json.contains("rho_mc"));
}

TEST_CASE("rho: output is byte-identical across thread counts") {
  auto c = config(R"({"kind":"named","name":"SL2","q":5})", R"({"elements":[3,17,25,40,41,77,90,101,110,2,9,60]})");
  const auto one = cli::cmd_rho(c).json.dump();
  c.threads = 4;
  CHECK(cli::cmd_rho(c).json.dump() == one);
  CHECK(json::parse(one)["rho"].get<double>() <= 1.0);
}

TEST_CASE("fourier-check and chartab") {
  auto c = config(R"({"kind":"named","name":"Q8"})", R"({"elements":[1,2,3,4,5,6,7,1,2]})");
  const auto f = cli::cmd_fourier_check(c);
  CHECK(f.exit_code == cli::kPass);
  CHECK(f.json["max_abs_deviation"].get<double>() <= 1e-8);
  CHECK(cli::cmd_chartab(c).json["checks"]["degree_square_sum"] == 8);
}

TEST_CASE("mult-bounds on a cyclic group") {
  auto c = config(R"({"kind":"named","name":"cyclic","n":6})", "");
  const auto r = cli::cmd_mult_bounds(c);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.json["report"]["entries"].empty());
}

TEST_CASE("example2 and embed wrappers") {
  cli::RunConfig c;
  c.n = 100;
  c.k_bound = 3;
  c.seed = 9;
  const auto e2 = cli::cmd_example2(c);
  CHECK(e2.exit_code == cli::kPass);
  CHECK(e2.json["pass"] == true);

  cli::RunConfig ec;
  ec.input = write_json("embed.json", R"({"matrices":[[[1,1],[0,1]]],"n":5,"p_min":2})");
  CHECK(cli::cmd_embed(ec).json["p"] == 5);
}

TEST_CASE("sweep csv") {
  auto c = config(R"({"kind":"named","name":"SL2","q":5})", R"({"elements":[3,17,25,40]})");
  c.format = "csv";
  const auto r = cli::cmd_sweep(c);
  REQUIRE(r.csv);
  CHECK(r.csv->rfind("n,rho_count,rho_denom_exp,rho,loe_bound,theorem_141_bound\n", 0) == 0);
  CHECK(std::count(r.csv->begin(), r.csv->end(), '\n') == 5);
}

TEST_CASE("config keys and exit codes") {
  cli::RunConfig c;
  CHECK_THROWS_AS(cli::apply_config_json(c, json::parse(R"({"nope":1})")), Error);
  cli::RunConfig zero;
  CHECK_THROWS_AS(cli::apply_config_json(zero, json::parse(R"({"tol":0})")), Error);
  cli::apply_config_json(c, json::parse(R"({"seed":7,"samples":10,"threads":2})"));
  CHECK(c.seed == 7);
  CHECK(c.threads == 2);

  auto capped = config(R"({"kind":"named","name":"SL2","q":7})", "");
  capped.cap = 10;
  capped.out = fs::temp_directory_path() / "anticonc_cli_test" / "out.json";
  CHECK(cli::run_command("closure", capped) == cli::kResourceCap);
  cli::RunConfig missing;
  CHECK(cli::run_command("rho", missing) == cli::kInputError);
  CHECK(cli::run_command("no-such-command", missing) == cli::kInputError);
}
