#include "dyngame/commands.hpp"

#include <fstream>
#include <ostream>

#include "dyngame/errors.hpp"
#include "dyngame/generate.hpp"
#include "dyngame/io.hpp"
#include "dyngame/oracle.hpp"

namespace dyngame {

namespace {

// stdout carries exactly the JSON report; --json gets the same bytes.
void emit(const Json& report, const RunConfig& config, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!config.json_path.empty()) {
    std::ofstream file(config.json_path, std::ios::binary);
    if (!file) throw Error("cannot write '" + config.json_path + "'");
    file << text;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const AssumptionError& e) {
    err << e.what() << '\n';
    return kExitAssumptions;
  } catch (const NotAStoppingTimeError& e) {
    err << e.what() << '\n';
    return kExitBadRegion;
  } catch (const TreeMismatchError& e) {
    err << e.what() << '\n';
    return kExitBadRegion;
  } catch (const TooLargeError& e) {
    err << e.what() << '\n';
    return kExitTooLarge;
  } catch (const InversionDomainError& e) {
    err << e.what() << '\n';
    return kExitInversionDomain;
  } catch (const InternalError& e) {
    err << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

DynkinGame<Rational> load_configured_game(const RunConfig& config) {
  auto game = load_game(config.input_path);
  if (config.tie_override) game.tie = *config.tie_override;
  return game;
}

bool float_mode(const RunConfig& config) { return config.mode == RunConfig::Mode::Float; }

template <class S>
int solve_and_report(const DynkinGame<S>& game, const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  const double tol = float_mode(config) ? config.tolerance : 0.0;
  if (auto report = check_assumptions(normalize_terminal(game)); !report.ok()) {
    for (const auto& v : report.violations) err << v << '\n';
    return kExitAssumptions;
  }
  auto result = iterate_equilibrium(game, tol);
  if (!config.trace_path.empty()) {
    std::ofstream file(config.trace_path, std::ios::binary);
    if (!file) throw Error("cannot write '" + config.trace_path + "'");
    file << trace_csv(result.trace);
  }
  emit(equilibrium_report(result, game.tie), config, out);
  return kExitOk;
}

template <class S>
int verify_and_report(const DynkinGame<S>& game, const StoppingTime& tau1,
                      const StoppingTime& tau2, const RunConfig& config, std::ostream& out) {
  const double tol = float_mode(config) ? config.tolerance : 0.0;
  EquilibriumResult<S> candidate;
  candidate.tau1_star = tau1;
  candidate.tau2_star = tau2;
  auto payoff = evaluate_payoffs(game, tau1, tau2);
  candidate.j1_star = payoff.j1;
  candidate.j2_star = payoff.j2;
  auto report = verify_equilibrium(game, candidate, tol);

  Json j;
  j["ok"] = report.ok();
  j["J1"] = scalar_json(payoff.j1);
  j["J2"] = scalar_json(payoff.j2);
  j["best_response_1"] = scalar_json(best_response_value(game, Player::One, tau2));
  j["best_response_2"] = scalar_json(best_response_value(game, Player::Two, tau1));
  j["issues"] = report.issues;
  emit(j, config, out);
  return report.ok() ? kExitOk : kExitNotEquilibrium;
}

template <class S>
int oracle_and_report(const DynkinGame<S>& game, const RunConfig& config, std::ostream& out) {
  const double tol = float_mode(config) ? config.tolerance : 0.0;
  const std::uint64_t count = stopping_time_count(game.tree);
  if (count > kEnumerationBound)
    throw TooLargeError("stopping-time count " + count_to_string(count) + " exceeds the bound " +
                        std::to_string(kEnumerationBound));
  auto neps = brute_force_neps(game, tol);

  Json j;
  j["stopping_time_count"] = count;
  j["pairs_scanned"] = count * count;
  j["neps"] = nep_list_json(neps);
  if (is_zero_sum(game, tol)) j["zero_sum_value"] = scalar_json(zero_sum_value(game, tol));
  emit(j, config, out);
  return kExitOk;
}

}  // namespace

int run_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto game = load_configured_game(config);
    if (float_mode(config)) return solve_and_report(to_float(game), config, out, err);
    return solve_and_report(game, config, out, err);
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto game = load_configured_game(config);
    if (config.tau1_path.empty() || config.tau2_path.empty())
      throw ParseError("verify needs --tau1 and --tau2");
    auto tau1 = load_stopping_time(config.tau1_path, game.tree);
    auto tau2 = load_stopping_time(config.tau2_path, game.tree);
    if (float_mode(config))
      return verify_and_report(to_float(game), tau1, tau2, config, out);
    return verify_and_report(game, tau1, tau2, config, out);
  });
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    // Feasibility precheck on the raw document: a binomial spec can be
    // refused from its depth alone, before materializing the tree.
    const Json doc = read_json_file(config.input_path);
    if (doc.contains("tree") && doc["tree"].is_object() && doc["tree"].contains("kind") &&
        doc["tree"]["kind"] == "binomial" && doc["tree"].contains("depth") &&
        doc["tree"]["depth"].is_number_integer()) {
      const std::uint64_t count = binomial_stopping_time_count(doc["tree"]["depth"].get<int>());
      if (count > kEnumerationBound)
        throw TooLargeError("stopping-time count " + count_to_string(count) +
                            " exceeds the bound " + std::to_string(kEnumerationBound));
    }
    auto game = game_from_json(doc);
    if (config.tie_override) game.tie = *config.tie_override;
    if (float_mode(config)) return oracle_and_report(to_float(game), config, out);
    return oracle_and_report(game, config, out);
  });
}

int run_price(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto claim = load_claim(config.input_path);
    const bool needs_float = claim_requires_float(claim);
    if (config.mode == RunConfig::Mode::Exact && needs_float)
      throw ParseError("CARA utilities require float mode");
    const bool use_float = config.mode == RunConfig::Mode::Float ||
                           (config.mode == RunConfig::Mode::Auto && needs_float);
    if (use_float) {
      emit(price_report(price_claim<double>(claim, config.tolerance)), config, out);
    } else {
      emit(price_report(price_claim<Rational>(claim)), config, out);
    }
    return kExitOk;
  });
}

int run_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto generated = generate_game(config.depth, config.seed);
    emit(generated.file, config, out);
    return kExitOk;
  });
}

}  // namespace dyngame
