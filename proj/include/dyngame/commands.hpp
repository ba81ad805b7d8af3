// Subcommand entry points shared by the CLI binary and the test suites.
// Each writes its JSON report to `out` (and to the --json path when given),
// diagnostics to `err`, and returns the process exit code.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dyngame/dynkin.hpp"

namespace dyngame {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotEquilibrium = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitAssumptions = 3;
inline constexpr int kExitBadRegion = 4;
inline constexpr int kExitTooLarge = 5;
inline constexpr int kExitInversionDomain = 6;
inline constexpr int kExitInternal = 70;

struct RunConfig {
  std::string input_path;
  enum class Mode { Auto, Exact, Float } mode = Mode::Auto;
  double tolerance = 1e-9;
  std::optional<TieConvention> tie_override;
  std::string json_path;   // report copy
  std::string trace_path;  // solve: iteration trace CSV
  std::string tau1_path, tau2_path;
  int depth = 2;  // gen
  std::uint64_t seed = 0;
};

int run_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_price(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_gen(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dyngame
