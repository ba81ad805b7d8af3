#include "dyngame/generate.hpp"

#include "dyngame/errors.hpp"

namespace dyngame {

namespace {

Rational canonical(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational grid_value(SplitMix64& rng, long den) {
  return canonical(rng.int_in(-16, 16), den);
}

}  // namespace

FiltrationTree generate_tree(int depth, SplitMix64& rng) {
  const long den = 2 + static_cast<long>(rng.below(15));  // 2..16
  const long num = 1 + static_cast<long>(rng.below(den - 1));
  return FiltrationTree::binomial(depth, canonical(num, den));
}

AdaptedProcess<Rational> generate_process(const FiltrationTree& tree, SplitMix64& rng) {
  AdaptedProcess<Rational> proc;
  proc.values.reserve(tree.node_count());
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    const long den = 1 + static_cast<long>(rng.below(16));
    proc.values.push_back(grid_value(rng, den));
  }
  return proc;
}

GeneratedGame generate_game(int depth, std::uint64_t seed) {
  if (depth < 1 || depth > 12)
    throw InvalidParameterError("gen depth must be in [1, 12], got " + std::to_string(depth));

  SplitMix64 rng(seed);
  const long p_den = 2 + static_cast<long>(rng.below(15));
  const long p_num = 1 + static_cast<long>(rng.below(p_den - 1));
  const Rational p_up = canonical(p_num, p_den);

  DynkinGame<Rational> g;
  g.tree = FiltrationTree::binomial(depth, p_up);
  g.tie = TieConvention::P1Priority;
  const int n = g.tree.node_count();
  g.x1.values.resize(n);
  g.y1.values.resize(n);
  g.x2.values.resize(n);
  g.y2.values.resize(n);

  for (NodeId v = 0; v < n; ++v) {
    const long den = 1 + static_cast<long>(rng.below(16));
    Rational y1 = grid_value(rng, den);
    Rational y2 = grid_value(rng, den);
    Rational x1, x2;
    if (rng.below(4) == 0) {
      // No gap for player 1; player 2 may sit anywhere below Y2.
      x1 = y1;
      x2 = y2 - canonical(static_cast<long>(rng.below(9)), den);
    } else {
      // Strict player-1 gap forces a strict player-2 gap.
      x1 = y1 - canonical(1 + static_cast<long>(rng.below(8)), den);
      x2 = y2 - canonical(1 + static_cast<long>(rng.below(8)), den);
    }
    g.y1.values[v] = std::move(y1);
    g.y2.values[v] = std::move(y2);
    g.x1.values[v] = std::move(x1);
    g.x2.values[v] = std::move(x2);
  }
  for (NodeId leaf : g.tree.leaves()) g.y1[leaf] = g.x1[leaf];

  Json tree_block;
  tree_block["kind"] = "binomial";
  tree_block["depth"] = depth;
  tree_block["p_up"] = format_rational(p_up);

  GeneratedGame out;
  out.file = game_to_json(g, tree_block);
  out.game = std::move(g);
  return out;
}

DynkinGame<Rational> generate_zero_sum_game(int depth, std::uint64_t seed) {
  SplitMix64 rng(seed);
  DynkinGame<Rational> g;
  g.tree = generate_tree(depth, rng);
  g.tie = TieConvention::P1Priority;
  const int n = g.tree.node_count();
  g.x1.values.resize(n);
  g.y1.values.resize(n);
  g.x2.values.resize(n);
  g.y2.values.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const long den = 1 + static_cast<long>(rng.below(16));
    Rational y1 = grid_value(rng, den);
    Rational x1 = rng.below(3) == 0 ? y1 : y1 - canonical(1 + static_cast<long>(rng.below(8)), den);
    g.y1.values[v] = y1;
    g.x1.values[v] = x1;
  }
  for (NodeId leaf : g.tree.leaves()) g.y1[leaf] = g.x1[leaf];
  for (NodeId v = 0; v < n; ++v) {
    g.x2.values[v] = -g.y1[v];
    g.y2.values[v] = -g.x1[v];
  }
  return g;
}

GameClaim generate_claim(int depth, std::uint64_t seed, UtilityFunction seller,
                         UtilityFunction buyer) {
  SplitMix64 rng(seed);
  GameClaim claim;
  claim.tree = generate_tree(depth, rng);
  claim.seller_utility = std::move(seller);
  claim.buyer_utility = std::move(buyer);
  const int n = claim.tree.node_count();
  claim.lower.values.resize(n);
  claim.upper.values.resize(n);
  claim.settlement.values.assign(n, Rational(0));
  for (NodeId v = 0; v < n; ++v) {
    const long den = 1 + static_cast<long>(rng.below(16));
    const long base = rng.int_in(-16, 16);
    const long gap = static_cast<long>(rng.below(9));
    claim.lower.values[v] = canonical(base, den);
    claim.upper.values[v] = canonical(base + gap, den);
    if (claim.tree.is_leaf(v))
      claim.settlement.values[v] = canonical(base + static_cast<long>(rng.below(gap + 1)), den);
  }
  return claim;
}

}  // namespace dyngame
