// American game claims: a contract the buyer may exercise (receiving L) and
// the seller may cancel (paying U, with U - L the cancellation penalty),
// settling at xi when both sides wait to maturity. Pricing reduces the claim
// to a stopping game under each side's utility; the monetary prices come
// back through the closed-form utility inverses.
//
// Mapping to the game (buyer has tie priority, because a simultaneous stop
// before maturity settles as an exercise):
//   seller (player 1):  X1 = phi1(-U) off leaves,  Y1 = phi1(-L) off leaves
//   buyer  (player 2):  X2 = phi2(L)  off leaves,  Y2 = phi2(U)  off leaves
//   leaves:             X1 = Y1 = phi1(-xi),       X2 = Y2 = phi2(xi)
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dyngame/dynkin.hpp"
#include "dyngame/process.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

// Closed enumeration of utility families so inverses stay closed-form and
// instance files stay declarative. Both families are strictly increasing,
// which the price inversion and the strict-gap assumption both need.
class UtilityFunction {
 public:
  enum class Family { Linear, Cara };

  // x -> slope * x + intercept, slope > 0.
  static UtilityFunction linear(const Rational& slope, const Rational& intercept);
  // x -> (1 - exp(-alpha * x)) / alpha, alpha > 0. Range (-inf, 1/alpha).
  static UtilityFunction cara(const Rational& alpha);

  Family family() const { return family_; }
  // Linear utilities evaluate exactly; CARA forces float mode.
  bool exact() const { return family_ == Family::Linear; }
  const Rational& slope() const { return a_; }
  const Rational& intercept() const { return b_; }
  const Rational& risk_aversion() const { return alpha_; }

  Rational apply(const Rational& x) const;  // Linear only
  double apply(double x) const;
  Rational invert(const Rational& y) const;  // Linear only
  double invert(double y) const;             // throws InversionDomainError outside the range

 private:
  UtilityFunction() = default;
  Family family_ = Family::Linear;
  Rational a_{1}, b_{0};
  Rational alpha_{1};
};

struct GameClaim {
  FiltrationTree tree;
  AdaptedProcess<Rational> lower;       // L: payment to the buyer on exercise
  AdaptedProcess<Rational> upper;       // U: payment to the buyer on cancellation
  AdaptedProcess<Rational> settlement;  // xi: terminal settlement, read at leaves only
  UtilityFunction seller_utility = UtilityFunction::linear(1, 0);  // phi1
  UtilityFunction buyer_utility = UtilityFunction::linear(1, 0);   // phi2
};

// Claim invariants: L <= U on every node, L <= xi <= U at every leaf.
std::vector<std::string> check_claim(const GameClaim& claim);

inline bool claim_requires_float(const GameClaim& claim) {
  return !claim.seller_utility.exact() || !claim.buyer_utility.exact();
}

// Expected payment E[Gamma(tau, sigma)] by exact path sum: the buyer's
// exercise pays L when it comes first (ties included) before maturity, a
// strictly earlier cancellation pays U, and a double wait settles at xi.
Rational claim_payoff_expectation(const GameClaim& claim, const StoppingTime& tau_seller,
                                  const StoppingTime& sigma_buyer);

namespace detail {

template <class S>
S apply_utility(const UtilityFunction& phi, const S& x);
template <>
inline Rational apply_utility<Rational>(const UtilityFunction& phi, const Rational& x) {
  return phi.apply(x);
}
template <>
inline double apply_utility<double>(const UtilityFunction& phi, const double& x) {
  return phi.apply(x);
}

template <class S>
S invert_utility(const UtilityFunction& phi, const S& y);
template <>
inline Rational invert_utility<Rational>(const UtilityFunction& phi, const Rational& y) {
  return phi.invert(y);
}
template <>
inline double invert_utility<double>(const UtilityFunction& phi, const double& y) {
  return phi.invert(y);
}

}  // namespace detail

// The stopping game the claim reduces to. Instantiating with Rational
// requires both utilities to be exact.
template <class S>
DynkinGame<S> dynkin_from_claim(const GameClaim& claim) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (claim_requires_float(claim))
      throw InvalidParameterError("CARA utilities require float mode");
  }
  const auto& t = claim.tree;
  DynkinGame<S> g;
  g.tree = t;
  g.tie = TieConvention::P2Priority;
  g.x1.values.resize(t.node_count());
  g.y1.values.resize(t.node_count());
  g.x2.values.resize(t.node_count());
  g.y2.values.resize(t.node_count());
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const auto& phi1 = claim.seller_utility;
    const auto& phi2 = claim.buyer_utility;
    if (t.is_leaf(v)) {
      const S minus_xi = from_rational<S>(-claim.settlement[v]);
      const S xi = from_rational<S>(claim.settlement[v]);
      g.x1[v] = detail::apply_utility<S>(phi1, minus_xi);
      g.y1[v] = g.x1[v];
      g.x2[v] = detail::apply_utility<S>(phi2, xi);
      g.y2[v] = g.x2[v];
    } else {
      g.x1[v] = detail::apply_utility<S>(phi1, from_rational<S>(-claim.upper[v]));
      g.y1[v] = detail::apply_utility<S>(phi1, from_rational<S>(-claim.lower[v]));
      g.x2[v] = detail::apply_utility<S>(phi2, from_rational<S>(claim.lower[v]));
      g.y2[v] = detail::apply_utility<S>(phi2, from_rational<S>(claim.upper[v]));
    }
  }
  return g;
}

template <class S>
struct PriceQuote {
  S seller_price{};
  S buyer_price{};
  EquilibriumResult<S> equilibrium;  // player 1 = seller, player 2 = buyer
};

// Solves the reduced game and inverts the equilibrium utilities into cash:
// seller price = -phi1^{-1}(J1*), buyer price = phi2^{-1}(J2*).
template <class S>
PriceQuote<S> price_claim(const GameClaim& claim, double tol = 0.0) {
  if (auto problems = check_claim(claim); !problems.empty()) {
    std::string msg = "invalid claim:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidParameterError(msg);
  }
  auto game = dynkin_from_claim<S>(claim);
  if (auto report = check_assumptions(normalize_terminal(game)); !report.ok())
    throw InternalError("claim reduction produced a refused game: " + report.violations.front());

  PriceQuote<S> quote;
  quote.equilibrium = iterate_equilibrium(game, tol);
  quote.seller_price = -detail::invert_utility<S>(claim.seller_utility, quote.equilibrium.j1_star);
  quote.buyer_price = detail::invert_utility<S>(claim.buyer_utility, quote.equilibrium.j2_star);
  return quote;
}

}  // namespace dyngame
