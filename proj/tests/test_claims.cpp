#include <doctest.h>

#include <cmath>

#include "dyngame/claims.hpp"
#include "dyngame/generate.hpp"
#include "dyngame/oracle.hpp"
#include "support.hpp"

using namespace dyngame;
using namespace dyngame::testing;

TEST_CASE("utility inverses are closed form") {
  auto id = UtilityFunction::linear(1, 0);
  CHECK(id.invert(Rational(5)) == Rational(5));
  auto affine = UtilityFunction::linear(Rational(2), Rational(-3));
  CHECK(affine.invert(affine.apply(Rational(7, 3))) == Rational(7, 3));

  auto cara = UtilityFunction::cara(1);
  CHECK(cara.invert(1.0 - std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(cara.invert(2.0), InversionDomainError);
  CHECK_THROWS_AS(cara.apply(Rational(1)), DomainError);
  CHECK_THROWS_AS(UtilityFunction::linear(0, 0), InvalidParameterError);
  CHECK_THROWS_AS(UtilityFunction::cara(Rational(-1)), InvalidParameterError);
}

TEST_CASE("cara round trip within 1e-12 relative") {
  auto cara = UtilityFunction::cara(Rational(1, 2));
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    const double back = cara.invert(cara.apply(x));
    CHECK(std::fabs(back - x) <= 1e-12 * std::max(1.0, std::fabs(x)));
  }
}

TEST_CASE("claim reduction maps payments through the utilities") {
  auto g = dynkin_from_claim<Rational>(c1());
  CHECK(g.tie == TieConvention::P2Priority);
  CHECK(g.x1[0] == Rational(-3));
  CHECK(g.y1[0] == Rational(-1));
  CHECK(g.x2[0] == Rational(1));
  CHECK(g.y2[0] == Rational(3));
  CHECK(g.x1.values == proc({"-3", "-2", "0"}).values);
  CHECK(g.x2.values == proc({"1", "2", "0"}).values);
  CHECK(g.y2.values == proc({"3", "2", "0"}).values);
  CHECK(check_assumptions(normalize_terminal(g)).ok());

  auto cara = dynkin_from_claim<double>(c1(UtilityFunction::linear(1, 0), UtilityFunction::cara(1)));
  CHECK(cara.x2[0] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(dynkin_from_claim<Rational>(c1(UtilityFunction::cara(1), UtilityFunction::cara(1))),
                  InvalidParameterError);
}

TEST_CASE("identity utilities make the reduced game zero-sum") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto claim = generate_claim(1 + static_cast<int>(rng.below(4)), rng.next(),
                                UtilityFunction::linear(1, 0), UtilityFunction::linear(1, 0));
    auto g = dynkin_from_claim<Rational>(claim);
    // Player roles swapped relative to the zero-sum template: the buyer (2)
    // is the maximizer of the payment, the seller (1) of its negation.
    DynkinGame<Rational> swapped{g.tree, g.x2, g.y2, g.x1, g.y1, TieConvention::P1Priority};
    CHECK(is_zero_sum(swapped));
  }
}

TEST_CASE("expected claim payment by path sum") {
  auto claim = c1();
  auto at_t = maturity_stop(claim.tree);
  CHECK(claim_payoff_expectation(claim, at_t, root_stop()) == Rational(1));   // buyer exercises
  CHECK(claim_payoff_expectation(claim, root_stop(), at_t) == Rational(3));   // seller cancels
  CHECK(claim_payoff_expectation(claim, at_t, at_t) == Rational(1));          // settles at xi
  CHECK(claim_payoff_expectation(claim, root_stop(), root_stop()) == Rational(1));  // tie: exercise
}

TEST_CASE("risk-neutral price of the worked claim is the saddle value") {
  auto quote = price_claim<Rational>(c1());
  CHECK(quote.seller_price == Rational(1));
  CHECK(quote.buyer_price == Rational(1));
  CHECK(quote.equilibrium.tau1_star == maturity_stop(c1().tree));  // seller waits
  CHECK(quote.equilibrium.tau2_star == StoppingTime{{0}});         // buyer exercises now
  CHECK(quote.equilibrium.j1_star == Rational(-1));
  CHECK(quote.equilibrium.j2_star == Rational(1));
}

TEST_CASE("constant claims price at the constant under any utilities") {
  GameClaim claim;
  claim.tree = FiltrationTree::binomial(2, Rational(1, 3));
  const int n = claim.tree.node_count();
  claim.lower.values.assign(n, Rational(5, 2));
  claim.upper.values.assign(n, Rational(5, 2));
  claim.settlement.values.assign(n, Rational(5, 2));

  claim.seller_utility = UtilityFunction::linear(Rational(3), Rational(1));
  claim.buyer_utility = UtilityFunction::linear(Rational(1, 2), Rational(-2));
  auto exact = price_claim<Rational>(claim);
  CHECK(exact.seller_price == Rational(5, 2));
  CHECK(exact.buyer_price == Rational(5, 2));

  claim.seller_utility = UtilityFunction::cara(Rational(2));
  claim.buyer_utility = UtilityFunction::cara(Rational(1, 3));
  auto fl = price_claim<double>(claim, 1e-9);
  CHECK(fl.seller_price == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fl.buyer_price == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("cara pricing of the worked claims") {
  // c1: the buyer exercises immediately either way, so the price stays 1.
  auto q1 = price_claim<double>(c1(UtilityFunction::cara(1), UtilityFunction::cara(1)), 1e-9);
  CHECK(q1.buyer_price == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(q1.seller_price == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(q1.buyer_price <= 1.0 + 1e-9);  // never above the risk-neutral price

  // c2: both sides wait, the settlement is random, risk aversion bites.
  auto q2 = price_claim<double>(c2(UtilityFunction::cara(1), UtilityFunction::cara(1)), 1e-9);
  CHECK(q2.equilibrium.tau1_star == maturity_stop(c2(UtilityFunction::cara(1),
                                                     UtilityFunction::cara(1)).tree));
  CHECK(q2.equilibrium.tau2_star == maturity_stop(c2(UtilityFunction::cara(1),
                                                     UtilityFunction::cara(1)).tree));
  const double buyer_expected = -std::log((1.0 + std::exp(-4.0)) / 2.0);
  const double seller_expected = std::log((1.0 + std::exp(4.0)) / 2.0);
  CHECK(q2.buyer_price == doctest::Approx(buyer_expected).epsilon(1e-9));
  CHECK(q2.seller_price == doctest::Approx(seller_expected).epsilon(1e-9));
  const double risk_neutral = price_claim<Rational>(c2(UtilityFunction::linear(1, 0),
                                                       UtilityFunction::linear(1, 0)))
                                  .buyer_price.get_d();
  CHECK(q2.buyer_price <= risk_neutral + 1e-9);

  // The constructed pair matches a brute-force equilibrium of the utility game.
  auto game = dynkin_from_claim<double>(c2(UtilityFunction::cara(1), UtilityFunction::cara(1)));
  bool found = false;
  for (const auto& e : brute_force_neps(game, 1e-9))
    found |= e.tau1 == q2.equilibrium.tau1_star && e.tau2 == q2.equilibrium.tau2_star &&
             std::fabs(e.j1 - q2.equilibrium.j1_star) <= 1e-9 &&
             std::fabs(e.j2 - q2.equilibrium.j2_star) <= 1e-9;
  CHECK(found);
}

TEST_CASE("claim invariants are checked") {
  auto bad = c1();
  bad.lower[0] = 4;  // L > U at the root
  CHECK(!check_claim(bad).empty());
  CHECK_THROWS_AS(price_claim<Rational>(bad), InvalidParameterError);

  auto bad_xi = c1();
  bad_xi.settlement[1] = 10;  // outside [L, U] at leaf 1
  CHECK(!check_claim(bad_xi).empty());
}

TEST_CASE("reduction is monotone in the contract payments") {
  auto claim = generate_claim(2, 77, UtilityFunction::linear(1, 0), UtilityFunction::cara(1));
  auto base = dynkin_from_claim<double>(claim);

  auto raised_l = claim;
  raised_l.lower[0] += Rational(1, 4);
  if (raised_l.lower[0] <= raised_l.upper[0]) {
    auto g = dynkin_from_claim<double>(raised_l);
    for (NodeId v = 0; v < g.tree.node_count(); ++v) CHECK(g.x2[v] >= base.x2[v]);
  }

  auto raised_u = claim;
  raised_u.upper[0] += Rational(1, 4);
  auto g = dynkin_from_claim<double>(raised_u);
  for (NodeId v = 0; v < g.tree.node_count(); ++v) CHECK(g.y2[v] >= base.y2[v]);
}
