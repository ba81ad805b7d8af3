// Snell envelope on a filtration tree by backward induction: the smallest
// supermartingale dominating a reward process, its first-contact stopping
// time, and the optimality identity tying the two together.
#pragma once

#include <algorithm>

#include "dyngame/process.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

template <class S>
struct SnellResult {
  AdaptedProcess<S> envelope;
  StoppingTime first_hit;  // canonical first hit of {envelope = reward}
  S value_at_root{};
};

// One-step conditional expectation of proc at a non-leaf node.
template <class S>
S conditional_expectation(const FiltrationTree& tree, const AdaptedProcess<S>& proc, NodeId v) {
  if (tree.is_leaf(v))
    throw DomainError("conditional_expectation: node " + std::to_string(v) + " is a leaf");
  S acc{};
  for (NodeId c : tree.children(v)) acc += from_rational<S>(tree.edge_prob(c)) * proc[c];
  return acc;
}

// W(leaf) = reward(leaf); W(v) = max(reward(v), E[W | v]). The first-hit
// region always covers every path because leaves satisfy W = reward.
template <class S>
SnellResult<S> snell_envelope(const FiltrationTree& tree, const AdaptedProcess<S>& reward,
                              double tol = 0.0) {
  require_complete(tree, reward, "snell_envelope");

  AdaptedProcess<S> w;
  w.values.resize(tree.node_count());
  const auto& order = tree.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (tree.is_leaf(v)) {
      w[v] = reward[v];
    } else {
      w[v] = std::max(reward[v], conditional_expectation(tree, w, v));
    }
  }

  std::vector<NodeId> touching;
  for (NodeId v = 0; v < tree.node_count(); ++v)
    if (Num<S>::hit(w[v], reward[v], tol)) touching.push_back(v);

  SnellResult<S> result;
  result.first_hit = canonicalize(tree, touching);
  result.value_at_root = w[0];
  result.envelope = std::move(w);
  return result;
}

// E[reward at the first-hit stop] equals the envelope's root value. The
// expectation is a sum over region nodes: each stop node is hit with exactly
// its path probability.
template <class S>
bool optimal_value_check(const FiltrationTree& tree, const AdaptedProcess<S>& reward,
                         const SnellResult<S>& result, double tol = 0.0) {
  auto pp = path_probabilities_as<S>(tree);
  S acc{};
  for (NodeId v : result.first_hit.region) acc += pp[v] * reward[v];
  return Num<S>::eq(acc, result.value_at_root, tol);
}

}  // namespace dyngame
