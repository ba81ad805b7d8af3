// Command-line front end. Subcommands: solve, verify, oracle, price, gen.
// The JSON report goes to stdout (and to --json when given); diagnostics go
// to stderr. Exit codes are a stable contract, see commands.hpp.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "dyngame/commands.hpp"

namespace {

dyngame::RunConfig::Mode parse_mode(const std::string& mode) {
  if (mode == "exact") return dyngame::RunConfig::Mode::Exact;
  if (mode == "float") return dyngame::RunConfig::Mode::Float;
  return dyngame::RunConfig::Mode::Auto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Nonzero-sum stopping games on event trees: equilibrium construction, "
      "brute-force verification, and game-claim pricing"};
  app.require_subcommand(1);

  dyngame::RunConfig config;
  std::string mode = "auto";
  std::string tie;

  auto add_mode_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "Arithmetic mode: exact (default) or float")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    cmd->add_option("--tol", config.tolerance,
                    "Float-mode absolute tolerance for envelope hits and value comparisons");
  };
  auto add_tie_flag = [&](CLI::App* cmd) {
    cmd->add_option("--tie", tie, "Override the file's tie convention (p1 or p2)")
        ->check(CLI::IsMember({"p1", "p2"}));
  };
  auto add_json_flag = [&](CLI::App* cmd) {
    cmd->add_option("--json", config.json_path, "Also write the JSON report to this path");
  };

  CLI::App* solve = app.add_subcommand("solve", "Construct an equilibrium stopping pair");
  solve->add_option("input", config.input_path, "Game file")->required();
  add_mode_flags(solve);
  add_tie_flag(solve);
  add_json_flag(solve);
  solve->add_option("--trace", config.trace_path, "Write the iteration trace CSV to this path");

  CLI::App* verify = app.add_subcommand("verify", "Check a stopping pair for the Nash property");
  verify->add_option("input", config.input_path, "Game file")->required();
  verify->add_option("--tau1", config.tau1_path, "Player-1 stopping-time file")->required();
  verify->add_option("--tau2", config.tau2_path, "Player-2 stopping-time file")->required();
  add_mode_flags(verify);
  add_tie_flag(verify);
  add_json_flag(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "Enumerate all equilibria of a small game");
  oracle->add_option("input", config.input_path, "Game file")->required();
  add_mode_flags(oracle);
  add_tie_flag(oracle);
  add_json_flag(oracle);

  CLI::App* price = app.add_subcommand("price", "Price an American game claim");
  price->add_option("input", config.input_path, "Claim file")->required();
  add_mode_flags(price);
  add_json_flag(price);

  CLI::App* gen = app.add_subcommand("gen", "Emit a random game file (assumption-safe)");
  gen->add_option("--depth", config.depth, "Binomial tree depth, 1..12")->required();
  gen->add_option("--seed", config.seed, "64-bit seed");
  add_json_flag(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dyngame::kExitParse;
  }

  config.mode = parse_mode(mode);
  if (tie == "p1") config.tie_override = dyngame::TieConvention::P1Priority;
  if (tie == "p2") config.tie_override = dyngame::TieConvention::P2Priority;

  if (solve->parsed()) return dyngame::run_solve(config, std::cout, std::cerr);
  if (verify->parsed()) return dyngame::run_verify(config, std::cout, std::cerr);
  if (oracle->parsed()) return dyngame::run_oracle(config, std::cout, std::cerr);
  if (price->parsed()) return dyngame::run_price(config, std::cout, std::cerr);
  if (gen->parsed()) return dyngame::run_gen(config, std::cout, std::cerr);
  return dyngame::kExitParse;
}
