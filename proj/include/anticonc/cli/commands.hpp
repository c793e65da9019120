#pragma once

// Subcommand implementations behind the command-line tool. Each command
// takes a RunConfig and returns its exit code and output; nothing here
// touches argv, so the tests drive the same code paths.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace anticonc::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kInputError = 2, kResourceCap = 3 };

struct RunConfig {
  std::optional<std::filesystem::path> group;
  std::optional<std::filesystem::path> seq;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> dist_out;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;
  double tol = 1e-8;
  std::uint64_t cap = 4'000'000;
  unsigned threads = 1;
  std::string format = "json";
  std::optional<double> alpha;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> p_min;
  std::optional<std::uint64_t> k_bound;
  std::optional<std::uint64_t> b_index;
  std::optional<std::uint64_t> irrep_index;
  std::uint64_t draws = 1000;
  double grid_step = 1e-4;
  bool dump_irreps = false;
};

/// Fills `config` from a JSON object; unknown keys and non-positive
/// tolerances are rejected with InvalidInput.
void apply_config_json(RunConfig& config, const nlohmann::json& j);
void validate(const RunConfig& config);

struct CommandResult {
  int exit_code = kPass;
  nlohmann::json json;
  std::optional<std::string> csv;  // set when the command emitted CSV
};

CommandResult cmd_order(const RunConfig& c);
CommandResult cmd_closure(const RunConfig& c);
CommandResult cmd_rho(const RunConfig& c);
CommandResult cmd_mc(const RunConfig& c);
CommandResult cmd_chartab(const RunConfig& c);
CommandResult cmd_irreps(const RunConfig& c);
CommandResult cmd_fourier_check(const RunConfig& c);
CommandResult cmd_mult_bounds(const RunConfig& c);
CommandResult cmd_svd_props(const RunConfig& c);
CommandResult cmd_diag(const RunConfig& c);
CommandResult cmd_embed(const RunConfig& c);
CommandResult cmd_bounds(const RunConfig& c);
CommandResult cmd_example2(const RunConfig& c);
CommandResult cmd_sweep(const RunConfig& c);

/// Runs a subcommand by name, mapping library errors to exit codes
/// (caps -> 3, verification failures -> 1, everything else -> 2) and
/// writing the output to config.out or stdout.
int run_command(const std::string& name, const RunConfig& config);

}  // namespace anticonc::cli
