#include <doctest.h>

#include <algorithm>

#include "dyngame/generate.hpp"
#include "dyngame/oracle.hpp"
#include "dyngame/snell.hpp"
#include "support.hpp"

using namespace dyngame;
using dyngame::testing::proc;

namespace {

// Independent optimal-stopping oracle: best expected reward over every
// enumerated stopping time, by direct path sums.
Rational enumerated_best_value(const FiltrationTree& tree, const AdaptedProcess<Rational>& u) {
  auto pp = tree.path_probabilities();
  bool first = true;
  Rational best(0);
  for (const auto& tau : enumerate_stopping_times(tree)) {
    Rational value(0);
    for (NodeId v : tau.region) value += pp[v] * u[v];
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

}  // namespace

TEST_CASE("conditional expectation at a node") {
  auto t = FiltrationTree::binomial(1, Rational(1, 2));
  CHECK(conditional_expectation(t, proc({"9", "0", "4"}), 0) == Rational(2));
  CHECK(conditional_expectation(t, proc({"9", "5", "5"}), 0) == Rational(5));
  auto skewed = FiltrationTree::binomial(1, Rational(1, 3));
  CHECK(conditional_expectation(skewed, proc({"9", "3", "0"}), 0) == Rational(1));
  CHECK_THROWS_AS(conditional_expectation(t, proc({"9", "0", "4"}), 1), DomainError);
}

TEST_CASE("envelope on the worked depth-1 rewards") {
  auto t = FiltrationTree::binomial(1, Rational(1, 2));

  auto wait = snell_envelope(t, proc({"1", "0", "4"}));
  CHECK(wait.envelope.values == proc({"2", "0", "4"}).values);
  CHECK(wait.first_hit == maturity_stop(t));
  CHECK(wait.value_at_root == Rational(2));
  CHECK(optimal_value_check(t, proc({"1", "0", "4"}), wait));

  auto stop = snell_envelope(t, proc({"3", "0", "4"}));
  CHECK(stop.envelope.values == proc({"3", "0", "4"}).values);
  CHECK(stop.first_hit == StoppingTime{{0}});
  CHECK(stop.value_at_root == Rational(3));
  CHECK(optimal_value_check(t, proc({"3", "0", "4"}), stop));

  // A doctored first hit breaks the optimality identity: waiting yields 2.
  auto doctored = stop;
  doctored.first_hit = maturity_stop(t);
  CHECK(!optimal_value_check(t, proc({"3", "0", "4"}), doctored));
}

TEST_CASE("constant reward stops immediately") {
  auto t = FiltrationTree::binomial(2, Rational(1, 3));
  AdaptedProcess<Rational> u;
  u.values.assign(t.node_count(), Rational(5, 7));
  auto res = snell_envelope(t, u);
  for (NodeId v = 0; v < t.node_count(); ++v) CHECK(res.envelope[v] == Rational(5, 7));
  CHECK(res.first_hit == StoppingTime{{0}});
}

TEST_CASE("incomplete reward is refused") {
  auto t = FiltrationTree::binomial(1, Rational(1, 2));
  CHECK_THROWS_AS(snell_envelope(t, proc({"1", "2"})), IncompleteProcessError);
}

TEST_CASE("envelope invariants on random processes") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int depth = 1 + static_cast<int>(rng.below(5));
    auto t = generate_tree(depth, rng);
    auto u = generate_process(t, rng);
    auto res = snell_envelope(t, u);

    auto above = hit_at_or_above(t, res.first_hit.region);
    for (NodeId v = 0; v < t.node_count(); ++v) {
      CHECK(res.envelope[v] >= u[v]);  // dominance
      if (!t.is_leaf(v)) {
        const Rational cont = conditional_expectation(t, res.envelope, v);
        CHECK(res.envelope[v] >= cont);  // supermartingale
        if (above[v] == kNoNode) CHECK(res.envelope[v] == cont);  // martingale before the hit
      } else {
        CHECK(res.envelope[v] == u[v]);
      }
    }

    // E[W at the stop] = E[U at the stop] = W(root).
    auto pp = t.path_probabilities();
    Rational ew(0), eu(0);
    for (NodeId v : res.first_hit.region) {
      ew += pp[v] * res.envelope[v];
      eu += pp[v] * u[v];
    }
    CHECK(ew == res.value_at_root);
    CHECK(eu == res.value_at_root);
    CHECK(optimal_value_check(t, u, res));
  }
}

TEST_CASE("root value matches the enumerated optimum on small trees") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int depth = 1 + static_cast<int>(rng.below(3));
    auto t = generate_tree(depth, rng);
    auto u = generate_process(t, rng);
    auto res = snell_envelope(t, u);
    CHECK(res.value_at_root == enumerated_best_value(t, u));
  }
}
