// Shared fixtures: the small worked game and claim instances every suite
// leans on, plus tiny construction helpers.
#pragma once

#include <string>
#include <vector>

#include "dyngame/claims.hpp"
#include "dyngame/dynkin.hpp"
#include "dyngame/rational.hpp"

namespace dyngame::testing {

inline AdaptedProcess<Rational> proc(const std::vector<std::string>& values) {
  AdaptedProcess<Rational> p;
  p.values.reserve(values.size());
  for (const auto& v : values) p.values.push_back(parse_rational(v));
  return p;
}

// Depth-1 binary, p = 1/2. Player 1 prefers stopping at the root (X1 = 2
// beats the continuation 3/2); player 2 never wants to stop. Unique
// equilibrium ({root}, at-maturity) with payoffs (2, 1).
inline DynkinGame<Rational> g1() {
  DynkinGame<Rational> g;
  g.tree = FiltrationTree::binomial(1, Rational(1, 2));
  g.x1 = proc({"2", "3", "0"});
  g.y1 = proc({"3", "3", "0"});
  g.x2 = proc({"0", "2", "2"});
  g.y2 = proc({"1", "2", "2"});
  g.tie = TieConvention::P1Priority;
  return g;
}

// g1 with player 1's root payoffs lowered (X1 = 1, Y1 = 2): stopping early
// no longer pays, equilibrium is the double wait with payoffs (3/2, 2).
inline DynkinGame<Rational> g2() {
  DynkinGame<Rational> g = g1();
  g.x1[0] = 1;
  g.y1[0] = 2;
  return g;
}

inline DynkinGame<Rational> constant_game(const Rational& c, int depth = 1) {
  DynkinGame<Rational> g;
  g.tree = FiltrationTree::binomial(depth, Rational(1, 2));
  const int n = g.tree.node_count();
  g.x1.values.assign(n, c);
  g.y1.values.assign(n, c);
  g.x2.values.assign(n, c);
  g.y2.values.assign(n, c);
  g.tie = TieConvention::P1Priority;
  return g;
}

// Depth-1 binary claim, p = 1/2: L = (1; 2,0), U = (3; 2,0), xi = (2, 0).
// With risk-neutral sides the saddle value of the expected payment is 1.
inline GameClaim c1(UtilityFunction seller = UtilityFunction::linear(1, 0),
                    UtilityFunction buyer = UtilityFunction::linear(1, 0)) {
  GameClaim claim;
  claim.tree = FiltrationTree::binomial(1, Rational(1, 2));
  claim.lower = proc({"1", "2", "0"});
  claim.upper = proc({"3", "2", "0"});
  claim.settlement = proc({"0", "2", "0"});  // root entry unused
  claim.seller_utility = std::move(seller);
  claim.buyer_utility = std::move(buyer);
  return claim;
}

// Depth-1 binary claim where both sides wait: exercising now pays nothing
// (L = 0), cancelling is prohibitive (U = 10), settlement is (4, 0).
inline GameClaim c2(UtilityFunction seller, UtilityFunction buyer) {
  GameClaim claim;
  claim.tree = FiltrationTree::binomial(1, Rational(1, 2));
  claim.lower = proc({"0", "0", "0"});
  claim.upper = proc({"10", "4", "4"});
  claim.settlement = proc({"0", "4", "0"});
  claim.seller_utility = std::move(seller);
  claim.buyer_utility = std::move(buyer);
  return claim;
}

inline StoppingTime root_stop() { return StoppingTime{{0}}; }

}  // namespace dyngame::testing
