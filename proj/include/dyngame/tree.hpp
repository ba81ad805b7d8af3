// Finite non-recombining event trees. Every node is an atom of the
// information available at its depth, so an adapted process is one value per
// node and a stopping time is exactly the first hit of a node set. This file
// carries the tree structure, the canonical stopping-time representation and
// the path helpers every other layer builds on.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dyngame/rational.hpp"

namespace dyngame {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

class FiltrationTree {
 public:
  // Empty placeholder; real trees come from the named builders.
  FiltrationTree() = default;

  struct Edge {
    NodeId id = kNoNode;
    NodeId parent = kNoNode;
    Rational prob;
  };

  // Full binary tree with 2^(depth+1)-1 nodes in heap layout: children of v
  // are 2v+1 (up, probability p_up) and 2v+2 (down). depth must lie in
  // [1, 20] and p_up strictly inside (0, 1).
  static FiltrationTree binomial(int depth, const Rational& p_up);

  // Tree from explicit non-root edges. Node ids must be dense (the root is
  // the implicit id 0), every parent id in range. Semantic invariants
  // (probability sums, leaf depths, reachability) are left to validate() so
  // that broken instances can still be loaded and reported on.
  static FiltrationTree from_edges(int horizon, const std::vector<Edge>& edges);

  int node_count() const { return static_cast<int>(parent_.size()); }
  int horizon() const { return horizon_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  // -1 for nodes unreachable from the root.
  int depth(NodeId v) const { return depth_[v]; }
  bool reachable(NodeId v) const { return depth_[v] >= 0; }
  bool is_leaf(NodeId v) const { return child_off_[v + 1] == child_off_[v]; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_ids_.data() + child_off_[v],
            static_cast<std::size_t>(child_off_[v + 1] - child_off_[v])};
  }
  // Probability of the edge parent->v; 1 at the root.
  const Rational& edge_prob(NodeId v) const { return edge_prob_[v]; }
  // Childless reachable nodes, ascending by id.
  const std::vector<NodeId>& leaves() const { return leaves_; }
  // Parents before children; covers exactly the reachable nodes.
  const std::vector<NodeId>& order() const { return order_; }

  // Product of edge probabilities from the root, per node.
  std::vector<Rational> path_probabilities() const;

  friend bool operator==(const FiltrationTree&, const FiltrationTree&) = default;

 private:
  void finalize(std::vector<std::vector<NodeId>>&& children);

  int horizon_ = 0;
  std::vector<NodeId> parent_;
  std::vector<int> depth_;
  std::vector<std::int32_t> child_off_;
  std::vector<NodeId> child_ids_;
  std::vector<Rational> edge_prob_;
  std::vector<NodeId> order_;
  std::vector<NodeId> leaves_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Semantic tree invariants: horizon >= 1, every edge probability in (0, 1],
// per-node child probabilities summing to 1 exactly, childless nodes sitting
// exactly at the horizon, every node reachable from the root.
ValidationReport validate(const FiltrationTree& tree);

// A stopping time in canonical form: a sorted node set, no member strictly
// below another on the same path, whose first hit along every root-to-leaf
// path defines the stop instant.
struct StoppingTime {
  std::vector<NodeId> region;
  friend bool operator==(const StoppingTime&, const StoppingTime&) = default;
};

// Canonical form of an arbitrary node set: drops members dominated by an
// ancestor in the set. Throws NotAStoppingTimeError when some path misses
// the set, TreeMismatchError on out-of-range ids.
StoppingTime canonicalize(const FiltrationTree& tree, const std::vector<NodeId>& region);

// Stop everywhere at the horizon: region = all leaves.
StoppingTime maturity_stop(const FiltrationTree& tree);

struct StopInstant {
  NodeId node = kNoNode;
  int time = 0;
};

// First region node on the root->leaf path and its depth.
StopInstant stop_instant(const FiltrationTree& tree, const StoppingTime& tau, NodeId leaf);

// For each node v: the region node at-or-above v on its path, or kNoNode.
// Leaves are all covered exactly when the region is a stopping time.
std::vector<NodeId> hit_at_or_above(const FiltrationTree& tree, std::span<const NodeId> region);
// Same, excluding v itself.
std::vector<NodeId> hit_strictly_above(const FiltrationTree& tree, std::span<const NodeId> region);

// True iff tau_a stops no later than tau_b on every root-to-leaf path.
bool pointwise_leq(const FiltrationTree& tree, const StoppingTime& tau_a, const StoppingTime& tau_b);

}  // namespace dyngame
