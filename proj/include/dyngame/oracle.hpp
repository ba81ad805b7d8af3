// Brute-force oracles: exhaustive stopping-time enumeration, exhaustive Nash
// search over all pairs, and the classical zero-sum value recursion. These
// exist to check the constructive solver, so they share none of its
// internals beyond the tree and payoff types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dyngame/dynkin.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

inline constexpr std::uint64_t kEnumerationBound = 1'000'000;
// Counts saturate here; anything above is only reported as "more than".
inline constexpr std::uint64_t kCountSaturated = std::uint64_t(4) << 60;

// Number of canonical stopping times: s(leaf) = 1, s(v) = 1 + prod over
// children of s(child). Saturates at kCountSaturated.
std::uint64_t stopping_time_count(const FiltrationTree& tree);
// Same recurrence for a full binary tree of the given depth, without
// building the tree.
std::uint64_t binomial_stopping_time_count(int depth);
std::string count_to_string(std::uint64_t count);

// All canonical stopping times, each exactly once, in lexicographic order of
// their sorted region lists. Throws TooLargeError above kEnumerationBound.
std::vector<StoppingTime> enumerate_stopping_times(const FiltrationTree& tree);

template <class S>
struct NepEntry {
  StoppingTime tau1, tau2;
  S j1{}, j2{};
};

// Every pair no unilateral deviation improves on, with its payoffs, ordered
// lexicographically by (tau1 region, tau2 region).
template <class S>
std::vector<NepEntry<S>> brute_force_neps(const DynkinGame<S>& g, double tol = 0.0) {
  const auto taus = enumerate_stopping_times(g.tree);
  const std::size_t n = taus.size();

  std::vector<PayoffPair<S>> payoff(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) payoff[i * n + j] = evaluate_payoffs(g, taus[i], taus[j]);

  std::vector<S> col_max1(n), row_max2(n);
  for (std::size_t j = 0; j < n; ++j) {
    col_max1[j] = payoff[j].j1;
    for (std::size_t i = 1; i < n; ++i) col_max1[j] = std::max(col_max1[j], payoff[i * n + j].j1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    row_max2[i] = payoff[i * n].j2;
    for (std::size_t j = 1; j < n; ++j) row_max2[i] = std::max(row_max2[i], payoff[i * n + j].j2);
  }

  std::vector<NepEntry<S>> neps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = payoff[i * n + j];
      if (Num<S>::eq(p.j1, col_max1[j], tol) && Num<S>::eq(p.j2, row_max2[i], tol))
        neps.push_back({taus[i], taus[j], p.j1, p.j2});
    }
  return neps;
}

// X2 = -Y1 and Y2 = -X1 on every node.
template <class S>
bool is_zero_sum(const DynkinGame<S>& g, double tol = 0.0) {
  for (NodeId v = 0; v < g.tree.node_count(); ++v)
    if (!Num<S>::eq(g.x2[v], -g.y1[v], tol) || !Num<S>::eq(g.y2[v], -g.x1[v], tol)) return false;
  return true;
}

// Value of the zero-sum specialization: V(leaf) = X1(leaf),
// V(v) = max(X1(v), min(Y1(v), E[V | v])). Under dominance the max-min
// ordering gives the same value, so the tie convention does not matter.
template <class S>
S zero_sum_value(const DynkinGame<S>& g, double tol = 0.0) {
  if (!is_zero_sum(g, tol))
    throw NotZeroSumError("the game is not zero-sum: needs X2 = -Y1 and Y2 = -X1 nodewise");
  for (NodeId v = 0; v < g.tree.node_count(); ++v)
    if (g.x1[v] > g.y1[v])
      throw AssumptionError("zero-sum value needs X1 <= Y1, violated at node " +
                            std::to_string(v));

  std::vector<S> value(g.tree.node_count());
  const auto& order = g.tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (g.tree.is_leaf(v)) {
      value[v] = g.x1[v];
      continue;
    }
    S cont{};
    for (NodeId c : g.tree.children(v)) cont += from_rational<S>(g.tree.edge_prob(c)) * value[c];
    value[v] = std::max(g.x1[v], std::min(g.y1[v], cont));
  }
  return value[0];
}

}  // namespace dyngame
