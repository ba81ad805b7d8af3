#include "dyngame/io.hpp"

#include <fstream>

#include "dyngame/errors.hpp"

namespace dyngame {

namespace {

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError(what + ": rationals must be strings or integers, got " + j.dump());
}

int int_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + key + "'");
  return doc[key].get<int>();
}

const Json& object_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_object())
    throw ParseError(std::string("missing or non-object field '") + key + "'");
  return doc[key];
}

// Process map keyed by decimal node id; must cover 0..n-1 exactly.
AdaptedProcess<Rational> process_from_json(const Json& map, const FiltrationTree& tree,
                                           const std::string& name) {
  AdaptedProcess<Rational> proc;
  proc.values.assign(tree.node_count(), Rational(0));
  std::vector<char> seen(tree.node_count(), 0);
  for (const auto& [key, value] : map.items()) {
    int id;
    try {
      std::size_t pos = 0;
      id = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(name + ": bad node id key '" + key + "'");
    }
    if (id < 0 || id >= tree.node_count())
      throw ParseError(name + ": node id " + key + " out of range");
    if (seen[id]) throw ParseError(name + ": duplicate node id " + key);
    seen[id] = 1;
    proc.values[id] = rational_from_json(value, name + "[" + key + "]");
  }
  for (NodeId v = 0; v < tree.node_count(); ++v)
    if (!seen[v]) throw ParseError(name + ": missing value for node " + std::to_string(v));
  return proc;
}

UtilityFunction utility_from_json(const Json& block, const std::string& name) {
  if (!block.is_object() || !block.contains("family"))
    throw ParseError(name + ": utility block needs a 'family'");
  const std::string family = block["family"].get<std::string>();
  if (family == "linear") {
    const Rational a = block.contains("a") ? rational_from_json(block["a"], name) : Rational(1);
    const Rational b = block.contains("b") ? rational_from_json(block["b"], name) : Rational(0);
    return UtilityFunction::linear(a, b);
  }
  if (family == "cara") {
    if (!block.contains("alpha")) throw ParseError(name + ": cara utility needs 'alpha'");
    return UtilityFunction::cara(rational_from_json(block["alpha"], name));
  }
  throw ParseError(name + ": unknown utility family '" + family + "'");
}

TieConvention tie_from_json(const Json& doc) {
  if (!doc.contains("tie")) return TieConvention::P1Priority;
  const std::string tie = doc["tie"].get<std::string>();
  if (tie == "p1") return TieConvention::P1Priority;
  if (tie == "p2") return TieConvention::P2Priority;
  throw ParseError("field 'tie' must be \"p1\" or \"p2\", got \"" + tie + "\"");
}

void require_valid(const FiltrationTree& tree) {
  if (auto report = validate(tree); !report.ok()) {
    std::string msg = "invalid tree:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ParseError(msg);
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

FiltrationTree tree_from_json(const Json& block, int horizon) {
  if (!block.is_object() || !block.contains("kind"))
    throw ParseError("tree block needs a 'kind'");
  const std::string kind = block["kind"].get<std::string>();
  if (kind == "binomial") {
    const int depth = int_field(block, "depth");
    if (depth != horizon)
      throw ParseError("binomial depth " + std::to_string(depth) + " does not match horizon " +
                       std::to_string(horizon));
    if (!block.contains("p_up")) throw ParseError("binomial tree needs 'p_up'");
    return FiltrationTree::binomial(depth, rational_from_json(block["p_up"], "p_up"));
  }
  if (kind == "explicit") {
    if (!block.contains("nodes") || !block["nodes"].is_array())
      throw ParseError("explicit tree needs a 'nodes' array");
    std::vector<FiltrationTree::Edge> edges;
    edges.reserve(block["nodes"].size());
    for (const auto& n : block["nodes"]) {
      FiltrationTree::Edge e;
      e.id = int_field(n, "id");
      e.parent = int_field(n, "parent");
      if (!n.contains("prob")) throw ParseError("node " + std::to_string(e.id) + " needs 'prob'");
      e.prob = rational_from_json(n["prob"], "prob of node " + std::to_string(e.id));
      edges.push_back(std::move(e));
    }
    return FiltrationTree::from_edges(horizon, edges);
  }
  throw ParseError("unknown tree kind '" + kind + "'");
}

Json explicit_tree_json(const FiltrationTree& tree) {
  Json nodes = Json::array();
  for (NodeId v = 1; v < tree.node_count(); ++v) {
    Json n;
    n["id"] = v;
    n["parent"] = tree.parent(v);
    n["prob"] = format_rational(tree.edge_prob(v));
    nodes.push_back(std::move(n));
  }
  Json block;
  block["kind"] = "explicit";
  block["nodes"] = std::move(nodes);
  return block;
}

DynkinGame<Rational> game_from_json(const Json& doc) {
  const int horizon = int_field(doc, "horizon");
  if (horizon < 1) throw ParseError("the game needs horizon >= 1");
  if (!doc.contains("tree")) throw ParseError("missing 'tree' block");
  DynkinGame<Rational> g;
  g.tree = tree_from_json(doc["tree"], horizon);
  require_valid(g.tree);
  const Json& procs = object_field(doc, "processes");
  g.x1 = process_from_json(object_field(procs, "X1"), g.tree, "X1");
  g.y1 = process_from_json(object_field(procs, "Y1"), g.tree, "Y1");
  g.x2 = process_from_json(object_field(procs, "X2"), g.tree, "X2");
  g.y2 = process_from_json(object_field(procs, "Y2"), g.tree, "Y2");
  g.tie = tie_from_json(doc);
  return g;
}

DynkinGame<Rational> load_game(const std::string& path) {
  return game_from_json(read_json_file(path));
}

Json game_to_json(const DynkinGame<Rational>& game, const Json& tree_block) {
  auto process_map = [&game](const AdaptedProcess<Rational>& proc) {
    Json map;
    for (NodeId v = 0; v < game.tree.node_count(); ++v)
      map[std::to_string(v)] = format_rational(proc[v]);
    return map;
  };
  Json doc;
  doc["horizon"] = game.tree.horizon();
  doc["tree"] = tree_block;
  Json procs;
  procs["X1"] = process_map(game.x1);
  procs["Y1"] = process_map(game.y1);
  procs["X2"] = process_map(game.x2);
  procs["Y2"] = process_map(game.y2);
  doc["processes"] = std::move(procs);
  doc["tie"] = tie_name(game.tie);
  return doc;
}

GameClaim claim_from_json(const Json& doc) {
  const int horizon = int_field(doc, "horizon");
  if (horizon < 1) throw ParseError("the claim needs horizon >= 1");
  if (!doc.contains("tree")) throw ParseError("missing 'tree' block");
  GameClaim claim;
  claim.tree = tree_from_json(doc["tree"], horizon);
  require_valid(claim.tree);
  claim.lower = process_from_json(object_field(doc, "L"), claim.tree, "L");
  claim.upper = process_from_json(object_field(doc, "U"), claim.tree, "U");

  // xi covers exactly the leaves.
  claim.settlement.values.assign(claim.tree.node_count(), Rational(0));
  const Json& xi = object_field(doc, "xi");
  std::vector<char> seen(claim.tree.node_count(), 0);
  for (const auto& [key, value] : xi.items()) {
    int id;
    try {
      std::size_t pos = 0;
      id = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("xi: bad node id key '" + key + "'");
    }
    if (id < 0 || id >= claim.tree.node_count() || !claim.tree.is_leaf(id))
      throw ParseError("xi: node " + key + " is not a leaf");
    seen[id] = 1;
    claim.settlement.values[id] = rational_from_json(value, "xi[" + key + "]");
  }
  for (NodeId leaf : claim.tree.leaves())
    if (!seen[leaf]) throw ParseError("xi: missing value for leaf " + std::to_string(leaf));

  claim.seller_utility = utility_from_json(object_field(doc, "phi1"), "phi1");
  claim.buyer_utility = utility_from_json(object_field(doc, "phi2"), "phi2");

  if (auto problems = check_claim(claim); !problems.empty()) {
    std::string msg = "invalid claim:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ParseError(msg);
  }
  return claim;
}

GameClaim load_claim(const std::string& path) { return claim_from_json(read_json_file(path)); }

StoppingTime load_stopping_time(const std::string& path, const FiltrationTree& tree) {
  const Json doc = read_json_file(path);
  if (!doc.contains("region") || !doc["region"].is_array())
    throw ParseError("stopping-time file needs a 'region' array");
  std::vector<NodeId> region;
  for (const auto& v : doc["region"]) {
    if (!v.is_number_integer()) throw ParseError("region entries must be integers");
    region.push_back(v.get<NodeId>());
  }
  return canonicalize(tree, region);
}

Json stopping_time_to_json(const StoppingTime& tau) {
  Json j;
  j["region"] = tau.region;
  return j;
}

}  // namespace dyngame
