// The nonzero-sum stopping game: payoff functionals, the assumption gate,
// the alternating Snell-envelope construction of a Nash equilibrium pair,
// and an independent best-response verifier.
//
// Conventions. Under P1Priority, player 1 is the stopper when both stop at
// the same instant: J1 pays X1 there and J2 pays Y2. P2Priority is the
// mirror image. The solver runs P1Priority games natively and reaches
// P2Priority games through the player-swap transform.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyngame/process.hpp"
#include "dyngame/snell.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

enum class TieConvention { P1Priority, P2Priority };
enum class Player { One, Two };

inline const char* tie_name(TieConvention tie) {
  return tie == TieConvention::P1Priority ? "p1" : "p2";
}

template <class S>
struct DynkinGame {
  FiltrationTree tree;
  AdaptedProcess<S> x1, y1, x2, y2;  // stop-payoff / stopped-payoff per player
  TieConvention tie = TieConvention::P1Priority;

  friend bool operator==(const DynkinGame&, const DynkinGame&) = default;
};

inline DynkinGame<double> to_float(const DynkinGame<Rational>& g) {
  return {g.tree, to_float(g.x1), to_float(g.y1), to_float(g.x2), to_float(g.y2), g.tie};
}

struct AssumptionReport {
  std::vector<std::string> violations;
  // Integrability of the payoff processes holds vacuously: every adapted
  // process on a finite tree is bounded.
  bool integrability_vacuous = true;
  bool ok() const { return violations.empty(); }
};

// Copy of the game with the priority player's stopped payoff pinned to the
// stop payoff at the horizon (Y1 := X1 on leaves under P1Priority, Y2 := X2
// under P2Priority). Payoffs of every stopping pair are unchanged: the
// overwritten values are never read by the payoff functional.
template <class S>
DynkinGame<S> normalize_terminal(DynkinGame<S> game) {
  auto& stopped = game.tie == TieConvention::P1Priority ? game.y1 : game.y2;
  const auto& stop = game.tie == TieConvention::P1Priority ? game.x1 : game.x2;
  for (NodeId leaf : game.tree.leaves()) stopped[leaf] = stop[leaf];
  return game;
}

// Two checks per node: dominance (X <= Y for both players: stopping first is
// never rewarded) and the strict-gap link (a strict gap for the priority
// player forces a strict gap for the other player). Violations are reported,
// not thrown; the solver refuses games with a non-empty report.
template <class S>
AssumptionReport check_assumptions(const DynkinGame<S>& g) {
  AssumptionReport report;
  auto flag = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };
  const bool p1_first = g.tie == TieConvention::P1Priority;
  for (NodeId v = 0; v < g.tree.node_count(); ++v) {
    if (g.x1[v] > g.y1[v])
      flag("dominance violated at node " + std::to_string(v) + ": X1 = " + Num<S>::str(g.x1[v]) +
           " > Y1 = " + Num<S>::str(g.y1[v]));
    if (g.x2[v] > g.y2[v])
      flag("dominance violated at node " + std::to_string(v) + ": X2 = " + Num<S>::str(g.x2[v]) +
           " > Y2 = " + Num<S>::str(g.y2[v]));
    const bool gap_priority = p1_first ? g.x1[v] < g.y1[v] : g.x2[v] < g.y2[v];
    const bool gap_other = p1_first ? g.x2[v] < g.y2[v] : g.x1[v] < g.y1[v];
    if (gap_priority && !gap_other)
      flag(std::string("strict-gap link violated at node ") + std::to_string(v) + ": " +
           (p1_first ? "X1 < Y1 but X2 = Y2" : "X2 < Y2 but X1 = Y1"));
  }
  return report;
}

template <class S>
struct PayoffPair {
  S j1{}, j2{};
};

// Expected payoffs of a stopping pair, path by path. On each path the game
// ends at the earlier stop; ties go to the priority player.
template <class S>
PayoffPair<S> evaluate_payoffs(const DynkinGame<S>& g, const StoppingTime& tau1,
                               const StoppingTime& tau2) {
  auto stop1 = hit_at_or_above(g.tree, tau1.region);
  auto stop2 = hit_at_or_above(g.tree, tau2.region);
  auto pp = path_probabilities_as<S>(g.tree);
  const bool p1_first = g.tie == TieConvention::P1Priority;

  PayoffPair<S> out;
  for (NodeId leaf : g.tree.leaves()) {
    const NodeId s1 = stop1[leaf], s2 = stop2[leaf];
    if (s1 == kNoNode || s2 == kNoNode)
      throw NotAStoppingTimeError("payoff of a region that misses a path");
    const int d1 = g.tree.depth(s1), d2 = g.tree.depth(s2);
    const bool p1_stops = p1_first ? d1 <= d2 : d1 < d2;
    out.j1 += pp[leaf] * (p1_stops ? g.x1[s1] : g.y1[s2]);
    out.j2 += pp[leaf] * (p1_stops ? g.y2[s1] : g.x2[s2]);
  }
  return out;
}

// The player's reward frozen at the opponent's stop: X above the stop node,
// the opponent-stop value of Y at and below it. Well defined because each
// node has a unique history.
template <class S>
AdaptedProcess<S> frozen_payoff(const DynkinGame<S>& g, Player p, const StoppingTime& opponent) {
  const auto& x = (p == Player::One) ? g.x1 : g.x2;
  const auto& y = (p == Player::One) ? g.y1 : g.y2;
  auto stop = hit_at_or_above(g.tree, opponent.region);
  AdaptedProcess<S> frozen;
  frozen.values.resize(g.tree.node_count());
  for (NodeId v = 0; v < g.tree.node_count(); ++v)
    frozen[v] = (stop[v] == kNoNode) ? x[v] : y[stop[v]];
  return frozen;
}

template <class S>
struct HalfStepResult {
  StoppingTime tentative;  // first contact of the envelope with X, capped at the opponent stop
  StoppingTime next;       // tentative where it beats the opponent stop, fallback elsewhere
  S envelope_root{};
};

// One half step of the construction for one player: Snell envelope of the
// frozen reward, tentative stop = first instant with W = X capped at the
// opponent's stop, and the next iterate = tentative where it stops strictly
// before the opponent, the fallback stop otherwise.
template <class S>
HalfStepResult<S> half_step(const DynkinGame<S>& g, Player p, const StoppingTime& opponent,
                            const StoppingTime& fallback, double tol = 0.0) {
  const auto& x = (p == Player::One) ? g.x1 : g.x2;
  auto frozen = frozen_payoff(g, p, opponent);
  auto env = snell_envelope(g.tree, frozen, tol);

  // Capping = first hit of (touch set) union (opponent region).
  std::vector<NodeId> touching = opponent.region;
  for (NodeId v = 0; v < g.tree.node_count(); ++v)
    if (Num<S>::hit(env.envelope[v], x[v], tol)) touching.push_back(v);
  StoppingTime tentative = canonicalize(g.tree, touching);

  auto tent_stop = hit_at_or_above(g.tree, tentative.region);
  auto opp_stop = hit_at_or_above(g.tree, opponent.region);
  auto fb_stop = hit_at_or_above(g.tree, fallback.region);

  const auto& leaves = g.tree.leaves();
  std::vector<NodeId> chosen(leaves.size(), kNoNode);
  std::vector<NodeId> region;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const NodeId leaf = leaves[i];
    const NodeId t = tent_stop[leaf], o = opp_stop[leaf], f = fb_stop[leaf];
    if (f == kNoNode) throw NotAStoppingTimeError("fallback region misses a path");
    chosen[i] = (g.tree.depth(t) < g.tree.depth(o)) ? t : f;
    region.push_back(chosen[i]);
  }
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());

  // The per-path composite of stopping times is again a stopping time; the
  // induced first hit must reproduce the choice on every path.
  auto induced = hit_at_or_above(g.tree, region);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (induced[leaves[i]] != chosen[i])
      throw InternalError("half step composed a region that is not a stopping time");

  return {std::move(tentative), StoppingTime{std::move(region)}, env.value_at_root};
}

template <class S>
struct TraceEntry {
  int index = 0;  // n, starting at 1; entries 1 and 2 are the maturity seeds
  StoppingTime tau;
  std::optional<StoppingTime> tentative;  // absent for the seeds
  std::optional<S> envelope_root;
};

template <class S>
struct EquilibriumResult {
  StoppingTime tau1_star, tau2_star;
  S j1_star{}, j2_star{};
  std::vector<TraceEntry<S>> trace;
  int iterations = 0;    // highest trace index
  bool swapped = false;  // solved through the player-swap transform
};

inline int iteration_bound(const FiltrationTree& tree) {
  return 2 * (tree.horizon() + 1) * static_cast<int>(tree.leaves().size()) + 4;
}

// Alternates player-1 / player-2 half steps from the all-maturity pair until
// both parities repeat. Both tail sequences are pointwise non-increasing, so
// on a finite tree the pair stabilizes; the hard bound only trips on an
// implementation bug.
template <class S>
EquilibriumResult<S> iterate_equilibrium(const DynkinGame<S>& game, double tol = 0.0) {
  if (game.tree.horizon() < 1)
    throw InvalidParameterError("the game needs horizon >= 1, got " +
                                std::to_string(game.tree.horizon()));

  if (game.tie == TieConvention::P2Priority) {
    DynkinGame<S> swapped{game.tree, game.x2, game.y2, game.x1, game.y1,
                          TieConvention::P1Priority};
    auto r = iterate_equilibrium(swapped, tol);
    EquilibriumResult<S> out;
    out.tau1_star = std::move(r.tau2_star);
    out.tau2_star = std::move(r.tau1_star);
    out.j1_star = std::move(r.j2_star);
    out.j2_star = std::move(r.j1_star);
    out.trace = std::move(r.trace);
    out.iterations = r.iterations;
    out.swapped = true;
    return out;
  }

  const DynkinGame<S> g = normalize_terminal(game);
  if (auto report = check_assumptions(g); !report.ok()) {
    std::string msg = "game refused:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw AssumptionError(msg);
  }

  const int bound = iteration_bound(g.tree);
  const StoppingTime at_maturity = maturity_stop(g.tree);

  EquilibriumResult<S> result;
  result.trace.push_back({1, at_maturity, std::nullopt, std::nullopt});
  result.trace.push_back({2, at_maturity, std::nullopt, std::nullopt});

  StoppingTime tau_odd = at_maturity;   // tau_{2n-1}
  StoppingTime tau_even = at_maturity;  // tau_{2n}
  for (;;) {
    auto odd = half_step(g, Player::One, tau_even, tau_odd, tol);
    result.trace.push_back({static_cast<int>(result.trace.size()) + 1, odd.next, odd.tentative,
                            odd.envelope_root});
    auto even = half_step(g, Player::Two, odd.next, tau_even, tol);
    result.trace.push_back({static_cast<int>(result.trace.size()) + 1, even.next, even.tentative,
                            even.envelope_root});

    const bool stabilized = odd.next == tau_odd && even.next == tau_even;
    tau_odd = std::move(odd.next);
    tau_even = std::move(even.next);
    if (stabilized) break;
    if (static_cast<int>(result.trace.size()) > bound)
      throw InternalError("iteration exceeded the hard bound " + std::to_string(bound) +
                          "; the construction must stabilize earlier");
  }

  result.tau1_star = tau_odd;
  result.tau2_star = tau_even;
  auto payoff = evaluate_payoffs(g, result.tau1_star, result.tau2_star);
  result.j1_star = std::move(payoff.j1);
  result.j2_star = std::move(payoff.j2);
  result.iterations = static_cast<int>(result.trace.size());
  return result;
}

// Best payoff the player can reach against a fixed opponent stop, by
// backward induction on the reward of stopping at each node, taken straight
// from the payoff definition (tie handling included). Deliberately
// independent of the half-step construction.
template <class S>
S best_response_value(const DynkinGame<S>& g, Player p, const StoppingTime& opponent) {
  const auto& x = (p == Player::One) ? g.x1 : g.x2;
  const auto& y = (p == Player::One) ? g.y1 : g.y2;
  const bool wins_ties = (p == Player::One) == (g.tie == TieConvention::P1Priority);
  auto stop = wins_ties ? hit_strictly_above(g.tree, opponent.region)
                        : hit_at_or_above(g.tree, opponent.region);

  std::vector<S> reward(g.tree.node_count());
  for (NodeId v = 0; v < g.tree.node_count(); ++v)
    reward[v] = (stop[v] == kNoNode) ? x[v] : y[stop[v]];

  std::vector<S> best(g.tree.node_count());
  const auto& order = g.tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (g.tree.is_leaf(v)) {
      best[v] = reward[v];
      continue;
    }
    S cont{};
    for (NodeId c : g.tree.children(v)) cont += from_rational<S>(g.tree.edge_prob(c)) * best[c];
    best[v] = std::max(reward[v], cont);
  }
  return best[0];
}

struct VerifyReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Certifies the Nash property: neither player can improve by a unilateral
// deviation, i.e. each stored value matches the best-response value against
// the partner's stop. Also re-derives the stored values from the payoff
// functional.
template <class S>
VerifyReport verify_equilibrium(const DynkinGame<S>& g, const EquilibriumResult<S>& result,
                                double tol = 0.0) {
  VerifyReport report;
  auto payoff = evaluate_payoffs(g, result.tau1_star, result.tau2_star);
  if (!Num<S>::eq(payoff.j1, result.j1_star, tol))
    report.issues.push_back("stored J1 = " + Num<S>::str(result.j1_star) +
                            " differs from the pair's payoff " + Num<S>::str(payoff.j1));
  if (!Num<S>::eq(payoff.j2, result.j2_star, tol))
    report.issues.push_back("stored J2 = " + Num<S>::str(result.j2_star) +
                            " differs from the pair's payoff " + Num<S>::str(payoff.j2));

  const S best1 = best_response_value(g, Player::One, result.tau2_star);
  const S best2 = best_response_value(g, Player::Two, result.tau1_star);
  if (!Num<S>::eq(best1, payoff.j1, tol))
    report.issues.push_back("player 1 can improve from " + Num<S>::str(payoff.j1) + " to " +
                            Num<S>::str(best1));
  if (!Num<S>::eq(best2, payoff.j2, tol))
    report.issues.push_back("player 2 can improve from " + Num<S>::str(payoff.j2) + " to " +
                            Num<S>::str(best2));
  return report;
}

}  // namespace dyngame
