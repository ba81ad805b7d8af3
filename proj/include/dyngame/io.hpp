// JSON instance files and machine-readable reports.
//
// Game file:    {"horizon": h, "tree": <tree>, "processes": {"X1": {...},
//                "Y1": {...}, "X2": {...}, "Y2": {...}}, "tie": "p1"|"p2"}
// Tree block:   {"kind": "binomial", "depth": d, "p_up": "1/2"}
//            or {"kind": "explicit", "nodes": [{"id": 1, "parent": 0,
//                "prob": "1/3"}, ...]}  (the root is the implicit node 0)
// Claim file:   {"horizon": h, "tree": <tree>, "L": {...}, "U": {...},
//                "xi": {<leaf>: ...}, "phi1": <utility>, "phi2": <utility>}
// Utility:      {"family": "linear", "a": "1", "b": "0"}
//            or {"family": "cara", "alpha": "1"}
// Stopping time:{"region": [nodeId, ...]}
//
// Rationals are strings ("num/den" or decimal); JSON integers are accepted
// as exact. Process maps are keyed by decimal node id and must cover every
// node (xi: every leaf).
#pragma once

#include <json.hpp>

#include <string>

#include "dyngame/claims.hpp"
#include "dyngame/dynkin.hpp"
#include "dyngame/oracle.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

FiltrationTree tree_from_json(const Json& block, int horizon);
Json explicit_tree_json(const FiltrationTree& tree);

DynkinGame<Rational> game_from_json(const Json& doc);
DynkinGame<Rational> load_game(const std::string& path);
Json game_to_json(const DynkinGame<Rational>& game, const Json& tree_block);

GameClaim claim_from_json(const Json& doc);
GameClaim load_claim(const std::string& path);

StoppingTime load_stopping_time(const std::string& path, const FiltrationTree& tree);
Json stopping_time_to_json(const StoppingTime& tau);

template <class S>
Json scalar_json(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return format_rational(v);
  } else {
    return v;
  }
}

template <class S>
Json equilibrium_report(const EquilibriumResult<S>& result, TieConvention tie) {
  Json j;
  j["tau1_star"] = stopping_time_to_json(result.tau1_star);
  j["tau2_star"] = stopping_time_to_json(result.tau2_star);
  j["J1_star"] = scalar_json(result.j1_star);
  j["J2_star"] = scalar_json(result.j2_star);
  j["iterations"] = result.iterations;
  j["tie"] = tie_name(tie);
  j["swapped"] = result.swapped;
  j["mode"] = std::is_same_v<S, Rational> ? "exact" : "float";
  return j;
}

template <class S>
std::string trace_csv(const std::vector<TraceEntry<S>>& trace) {
  std::string csv = "n,tau,tentative_tau,envelope_root\n";
  auto region_cell = [](const StoppingTime& tau) {
    std::string cell;
    for (std::size_t i = 0; i < tau.region.size(); ++i) {
      if (i) cell += ' ';
      cell += std::to_string(tau.region[i]);
    }
    return cell;
  };
  for (const auto& entry : trace) {
    csv += std::to_string(entry.index);
    csv += ',';
    csv += region_cell(entry.tau);
    csv += ',';
    if (entry.tentative) csv += region_cell(*entry.tentative);
    csv += ',';
    if (entry.envelope_root) csv += Num<S>::str(*entry.envelope_root);
    csv += '\n';
  }
  return csv;
}

template <class S>
Json price_report(const PriceQuote<S>& quote) {
  Json j;
  j["seller_price"] = scalar_json(quote.seller_price);
  j["buyer_price"] = scalar_json(quote.buyer_price);
  j["mode"] = std::is_same_v<S, Rational> ? "exact" : "float";
  j["tau_seller"] = stopping_time_to_json(quote.equilibrium.tau1_star);
  j["sigma_buyer"] = stopping_time_to_json(quote.equilibrium.tau2_star);
  j["J1_star"] = scalar_json(quote.equilibrium.j1_star);
  j["J2_star"] = scalar_json(quote.equilibrium.j2_star);
  j["iterations"] = quote.equilibrium.iterations;
  return j;
}

template <class S>
Json nep_list_json(const std::vector<NepEntry<S>>& neps) {
  Json list = Json::array();
  for (const auto& e : neps) {
    Json item;
    item["tau1"] = e.tau1.region;
    item["tau2"] = e.tau2.region;
    item["J1"] = scalar_json(e.j1);
    item["J2"] = scalar_json(e.j2);
    list.push_back(std::move(item));
  }
  return list;
}

}  // namespace dyngame
