#include "dyngame/tree.hpp"

#include <algorithm>
#include <deque>

#include "dyngame/errors.hpp"

namespace dyngame {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

}  // namespace

void FiltrationTree::finalize(std::vector<std::vector<NodeId>>&& children) {
  const int n = node_count();
  child_off_.assign(n + 1, 0);
  child_ids_.clear();
  child_ids_.reserve(n > 0 ? n - 1 : 0);
  for (NodeId v = 0; v < n; ++v) {
    child_off_[v + 1] = child_off_[v] + static_cast<std::int32_t>(children[v].size());
    child_ids_.insert(child_ids_.end(), children[v].begin(), children[v].end());
  }

  // BFS from the root: depths, parents-first order, leaf list. Nodes left at
  // depth -1 are unreachable and get flagged by validate().
  depth_.assign(n, -1);
  order_.clear();
  order_.reserve(n);
  leaves_.clear();
  std::deque<NodeId> queue{0};
  depth_[0] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    order_.push_back(v);
    if (is_leaf(v)) leaves_.push_back(v);
    for (NodeId c : this->children(v)) {
      if (depth_[c] != -1) continue;  // duplicate reachability: cycle artifact
      depth_[c] = depth_[v] + 1;
      queue.push_back(c);
    }
  }
  std::sort(leaves_.begin(), leaves_.end());
}

FiltrationTree FiltrationTree::binomial(int depth, const Rational& p_up) {
  if (depth < 1 || depth > 20)
    throw InvalidParameterError("binomial depth must be in [1, 20], got " + std::to_string(depth));
  if (!(p_up > 0 && p_up < 1))
    throw InvalidParameterError("p_up must lie strictly in (0, 1), got " + format_rational(p_up));

  const int n = (1 << (depth + 1)) - 1;
  FiltrationTree t;
  t.horizon_ = depth;
  t.parent_.resize(n);
  t.edge_prob_.resize(n);
  const Rational p_down = Rational(1) - p_up;

  std::vector<std::vector<NodeId>> children(n);
  t.parent_[0] = kNoNode;
  t.edge_prob_[0] = 1;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId up = 2 * v + 1;
    if (up >= n) continue;
    children[v] = {up, up + 1};
    t.parent_[up] = v;
    t.parent_[up + 1] = v;
    t.edge_prob_[up] = p_up;
    t.edge_prob_[up + 1] = p_down;
  }
  t.finalize(std::move(children));
  return t;
}

FiltrationTree FiltrationTree::from_edges(int horizon, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(edges.size()) + 1;
  FiltrationTree t;
  t.horizon_ = horizon;
  t.parent_.assign(n, kNoNode);
  t.edge_prob_.assign(n, Rational(0));
  t.edge_prob_[0] = 1;

  std::vector<std::vector<NodeId>> children(n);
  std::vector<char> seen(n, 0);
  for (const Edge& e : edges) {
    if (e.id <= 0 || e.id >= n)
      throw ParseError("node id " + node_str(e.id) + " out of the dense range 1.." +
                       std::to_string(n - 1));
    if (seen[e.id]) throw ParseError("duplicate node id " + node_str(e.id));
    seen[e.id] = 1;
    if (e.parent < 0 || e.parent >= n)
      throw ParseError("parent " + node_str(e.parent) + " of node " + node_str(e.id) +
                       " does not exist");
    t.parent_[e.id] = e.parent;
    t.edge_prob_[e.id] = e.prob;
    children[e.parent].push_back(e.id);
  }
  t.finalize(std::move(children));
  return t;
}

std::vector<Rational> FiltrationTree::path_probabilities() const {
  std::vector<Rational> pp(node_count(), Rational(0));
  pp[0] = 1;
  for (NodeId v : order_) {
    if (v == 0) continue;
    pp[v] = pp[parent_[v]] * edge_prob_[v];
  }
  return pp;
}

ValidationReport validate(const FiltrationTree& tree) {
  ValidationReport report;
  auto flag = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (tree.horizon() < 1) flag("horizon must be at least 1, got " + std::to_string(tree.horizon()));

  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (!tree.reachable(v)) {
      flag("node " + node_str(v) + " is not reachable from the root");
      continue;
    }
    if (v != 0) {
      const Rational& p = tree.edge_prob(v);
      if (!(p > 0 && p <= 1))
        flag("edge probability of node " + node_str(v) + " is " + format_rational(p) +
             ", outside (0, 1]");
    }
    if (tree.is_leaf(v)) {
      if (tree.depth(v) != tree.horizon())
        flag("leaf " + node_str(v) + " sits at depth " + std::to_string(tree.depth(v)) +
             ", not at the horizon " + std::to_string(tree.horizon()));
    } else {
      Rational sum(0);
      for (NodeId c : tree.children(v)) sum += tree.edge_prob(c);
      if (sum != 1)
        flag("child probabilities of node " + node_str(v) + " sum to " + format_rational(sum) +
             " != 1");
      if (tree.depth(v) >= tree.horizon())
        flag("node " + node_str(v) + " at depth " + std::to_string(tree.depth(v)) +
             " has children beyond the horizon");
    }
  }
  return report;
}

std::vector<NodeId> hit_at_or_above(const FiltrationTree& tree, std::span<const NodeId> region) {
  std::vector<char> member(tree.node_count(), 0);
  for (NodeId v : region) {
    if (v < 0 || v >= tree.node_count())
      throw TreeMismatchError("region node " + node_str(v) + " does not belong to this tree");
    member[v] = 1;
  }
  std::vector<NodeId> hit(tree.node_count(), kNoNode);
  for (NodeId v : tree.order()) {
    const NodeId p = tree.parent(v);
    const NodeId above = (p == kNoNode) ? kNoNode : hit[p];
    hit[v] = (above != kNoNode) ? above : (member[v] ? v : kNoNode);
  }
  return hit;
}

std::vector<NodeId> hit_strictly_above(const FiltrationTree& tree, std::span<const NodeId> region) {
  auto at_or_above = hit_at_or_above(tree, region);
  std::vector<NodeId> hit(tree.node_count(), kNoNode);
  for (NodeId v : tree.order()) {
    const NodeId p = tree.parent(v);
    hit[v] = (p == kNoNode) ? kNoNode : at_or_above[p];
  }
  return hit;
}

StoppingTime canonicalize(const FiltrationTree& tree, const std::vector<NodeId>& region) {
  auto hit = hit_at_or_above(tree, region);
  for (NodeId leaf : tree.leaves())
    if (hit[leaf] == kNoNode)
      throw NotAStoppingTimeError("the path through leaf " + node_str(leaf) +
                                  " never meets the region");
  StoppingTime tau;
  for (NodeId v = 0; v < tree.node_count(); ++v)
    if (hit[v] == v) tau.region.push_back(v);
  return tau;
}

StoppingTime maturity_stop(const FiltrationTree& tree) { return StoppingTime{tree.leaves()}; }

StopInstant stop_instant(const FiltrationTree& tree, const StoppingTime& tau, NodeId leaf) {
  if (leaf < 0 || leaf >= tree.node_count() || !tree.is_leaf(leaf))
    throw InvalidParameterError("node " + node_str(leaf) + " is not a leaf");
  NodeId first = kNoNode;
  for (NodeId v = leaf; v != kNoNode; v = tree.parent(v))
    if (std::binary_search(tau.region.begin(), tau.region.end(), v)) first = v;
  if (first == kNoNode)
    throw NotAStoppingTimeError("the path through leaf " + node_str(leaf) +
                                " never meets the region");
  return {first, tree.depth(first)};
}

bool pointwise_leq(const FiltrationTree& tree, const StoppingTime& tau_a,
                   const StoppingTime& tau_b) {
  auto hit_a = hit_at_or_above(tree, tau_a.region);
  auto hit_b = hit_at_or_above(tree, tau_b.region);
  for (NodeId leaf : tree.leaves()) {
    if (hit_a[leaf] == kNoNode || hit_b[leaf] == kNoNode)
      throw NotAStoppingTimeError("comparison of regions that miss a path");
    if (tree.depth(hit_a[leaf]) > tree.depth(hit_b[leaf])) return false;
  }
  return true;
}

}  // namespace dyngame
