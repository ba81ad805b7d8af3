#include "dyngame/oracle.hpp"

#include <algorithm>

#include "dyngame/errors.hpp"

namespace dyngame {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountSaturated / b) return kCountSaturated;
  return std::min(a * b, kCountSaturated);
}

std::uint64_t saturating_inc(std::uint64_t a) {
  return a >= kCountSaturated ? kCountSaturated : a + 1;
}

std::uint64_t count_subtree(const FiltrationTree& tree, NodeId v) {
  if (tree.is_leaf(v)) return 1;
  std::uint64_t prod = 1;
  for (NodeId c : tree.children(v)) prod = saturating_mul(prod, count_subtree(tree, c));
  return saturating_inc(prod);
}

// Stopping times restricted to the subtree rooted at v: stop at v itself, or
// one choice per child subtree. Mirrors the counting recurrence, so each
// canonical region appears exactly once.
std::vector<std::vector<NodeId>> enumerate_subtree(const FiltrationTree& tree, NodeId v) {
  std::vector<std::vector<NodeId>> out;
  out.push_back({v});
  if (tree.is_leaf(v)) return out;

  std::vector<std::vector<NodeId>> combos{{}};
  for (NodeId c : tree.children(v)) {
    auto child_regions = enumerate_subtree(tree, c);
    std::vector<std::vector<NodeId>> next;
    next.reserve(combos.size() * child_regions.size());
    for (const auto& base : combos)
      for (const auto& choice : child_regions) {
        auto merged = base;
        merged.insert(merged.end(), choice.begin(), choice.end());
        next.push_back(std::move(merged));
      }
    combos = std::move(next);
  }
  out.insert(out.end(), std::make_move_iterator(combos.begin()),
             std::make_move_iterator(combos.end()));
  return out;
}

}  // namespace

std::uint64_t stopping_time_count(const FiltrationTree& tree) { return count_subtree(tree, 0); }

std::uint64_t binomial_stopping_time_count(int depth) {
  std::uint64_t s = 1;
  for (int d = 0; d < depth; ++d) s = saturating_inc(saturating_mul(s, s));
  return s;
}

std::string count_to_string(std::uint64_t count) {
  if (count >= kCountSaturated) return "more than 4*10^18";
  return std::to_string(count);
}

std::vector<StoppingTime> enumerate_stopping_times(const FiltrationTree& tree) {
  const std::uint64_t count = stopping_time_count(tree);
  if (count > kEnumerationBound)
    throw TooLargeError("stopping-time count " + count_to_string(count) + " exceeds the bound " +
                        std::to_string(kEnumerationBound));

  auto regions = enumerate_subtree(tree, 0);
  for (auto& r : regions) std::sort(r.begin(), r.end());
  std::sort(regions.begin(), regions.end());

  std::vector<StoppingTime> out;
  out.reserve(regions.size());
  for (auto& r : regions) out.push_back(StoppingTime{std::move(r)});
  return out;
}

}  // namespace dyngame
