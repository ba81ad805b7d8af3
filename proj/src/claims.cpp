#include "dyngame/claims.hpp"

#include "dyngame/errors.hpp"

namespace dyngame {

UtilityFunction UtilityFunction::linear(const Rational& slope, const Rational& intercept) {
  if (!(slope > 0))
    throw InvalidParameterError("linear utility needs slope > 0, got " + format_rational(slope));
  UtilityFunction u;
  u.family_ = Family::Linear;
  u.a_ = slope;
  u.b_ = intercept;
  return u;
}

UtilityFunction UtilityFunction::cara(const Rational& alpha) {
  if (!(alpha > 0))
    throw InvalidParameterError("CARA utility needs alpha > 0, got " + format_rational(alpha));
  UtilityFunction u;
  u.family_ = Family::Cara;
  u.alpha_ = alpha;
  return u;
}

Rational UtilityFunction::apply(const Rational& x) const {
  if (family_ != Family::Linear)
    throw DomainError("CARA utility has no exact evaluation; use float mode");
  return a_ * x + b_;
}

double UtilityFunction::apply(double x) const {
  if (family_ == Family::Linear) return to_double(a_) * x + to_double(b_);
  const double alpha = to_double(alpha_);
  return (1.0 - std::exp(-alpha * x)) / alpha;
}

Rational UtilityFunction::invert(const Rational& y) const {
  if (family_ != Family::Linear)
    throw DomainError("CARA utility has no exact inverse; use float mode");
  return (y - b_) / a_;
}

double UtilityFunction::invert(double y) const {
  if (family_ == Family::Linear) return (y - to_double(b_)) / to_double(a_);
  const double alpha = to_double(alpha_);
  const double arg = 1.0 - alpha * y;
  if (!(arg > 0))
    throw InversionDomainError("value " + shortest_double(y) +
                               " is outside the CARA range (-inf, " +
                               shortest_double(1.0 / alpha) + ")");
  return -std::log(arg) / alpha;
}

std::vector<std::string> check_claim(const GameClaim& claim) {
  std::vector<std::string> problems;
  const auto& t = claim.tree;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (claim.lower[v] > claim.upper[v])
      problems.push_back("L > U at node " + std::to_string(v) + ": " +
                         format_rational(claim.lower[v]) + " > " +
                         format_rational(claim.upper[v]));
    if (t.is_leaf(v)) {
      if (claim.settlement[v] < claim.lower[v] || claim.settlement[v] > claim.upper[v])
        problems.push_back("settlement at leaf " + std::to_string(v) + " is " +
                           format_rational(claim.settlement[v]) + ", outside [L, U] = [" +
                           format_rational(claim.lower[v]) + ", " +
                           format_rational(claim.upper[v]) + "]");
    }
  }
  return problems;
}

Rational claim_payoff_expectation(const GameClaim& claim, const StoppingTime& tau_seller,
                                  const StoppingTime& sigma_buyer) {
  const auto& t = claim.tree;
  auto stop_seller = hit_at_or_above(t, tau_seller.region);
  auto stop_buyer = hit_at_or_above(t, sigma_buyer.region);
  auto pp = t.path_probabilities();

  Rational total(0);
  for (NodeId leaf : t.leaves()) {
    const NodeId s_tau = stop_seller[leaf], s_sigma = stop_buyer[leaf];
    if (s_tau == kNoNode || s_sigma == kNoNode)
      throw NotAStoppingTimeError("claim payoff of a region that misses a path");
    const int d_tau = t.depth(s_tau), d_sigma = t.depth(s_sigma);
    if (d_sigma <= d_tau && d_sigma < t.horizon()) {
      total += pp[leaf] * claim.lower[s_sigma];
    } else if (d_tau < d_sigma) {
      total += pp[leaf] * claim.upper[s_tau];
    } else {
      total += pp[leaf] * claim.settlement[leaf];  // both waited to maturity
    }
  }
  return total;
}

}  // namespace dyngame
