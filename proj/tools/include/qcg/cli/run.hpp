#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcg/instances.hpp"

namespace qcg::cli {

enum class Command { kValidate, kCoalition, kCheck, kPareto, kExists, kThreshold, kMetrics, kGen, kOracle };
enum class OracleCommand { kPareto, kCoalition };
enum class Format { kJson, kTable };

/// Which built-in family to generate and with what parameters.
struct GenSpec {
  std::string family;  // xor, expne, infne, pos, partition, 3sat, hampath
  std::size_t n = 1;
  std::uint64_t w = 1;
  std::vector<std::uint64_t> numbers;
  CnfFormula cnf;
  HamPathInstance hampath;
};

/// "expne:3", "pos:5", "partition:2,4,6", "3sat:1,2,-3;-1,2,3",
/// "hampath:3:0-1,1-2" or "hampath:3:0-1,1-2:0".
GenSpec parse_gen_spec(const std::string& text);

/// "1,2,-3;-1,2,3": clauses separated by ';', signed 1-based variables.
CnfFormula parse_cnf(const std::string& text, std::size_t min_variables = 0);

/// "0-1,1-2"
std::vector<std::pair<std::size_t, std::size_t>> parse_edges(const std::string& text);

struct RunConfig {
  Command command = Command::kValidate;
  OracleCommand oracle = OracleCommand::kPareto;
  std::optional<std::string> input_path;
  std::optional<GenSpec> generator;
  std::string player;
  std::string lasso_path;
  std::string bound;
  Format format = Format::kJson;
  std::size_t player_cap = 12;
  std::uint64_t strategy_cap = 1'000'000;
  std::uint64_t path_cap = 10'000'000;
  std::size_t pump_cycle_cap = 10'000;
};

struct RunResult {
  int exit_code = 0;
  std::string output;  // stdout document
  std::string error;   // stderr message, empty on success
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInternal = 4;

RunResult run(const RunConfig& config);

/// Parses argv with CLI11 and runs; usage errors map to exit code 2.
RunResult run_command_line(int argc, const char* const* argv);
RunResult run_command_line(const std::vector<std::string>& args);

}  // namespace qcg::cli
