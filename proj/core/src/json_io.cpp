#include "wudcr/json_io.hpp"

#include <json.hpp>

#include "wudcr/error.hpp"

namespace wudcr {

using Json = nlohmann::ordered_json;

namespace {

std::string emit(const Json& j) { return j.dump() + "\n"; }

Json placement_json(const Placement& p) {
  Json nodes = Json::array();
  for (NodeId v = 0; v < p.size(); ++v) {
    const Cell c = p.at(v);
    Json n;
    n["id"] = v;
    n["q"] = c.q;
    n["r"] = c.r;
    nodes.push_back(std::move(n));
  }
  Json j;
  j["nodes"] = std::move(nodes);
  return j;
}

Json edges_json(const Tree& t) {
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back(Json::array({a, b}));
  return edges;
}

Json formula_json(const CnfFormula& f) {
  Json clauses = Json::array();
  for (const auto& c : f.clauses) {
    Json lits = Json::array();
    for (const Literal& l : c) lits.push_back(l.positive ? l.variable : -l.variable);
    clauses.push_back(std::move(lits));
  }
  Json j;
  j["n"] = f.n;
  j["clauses"] = std::move(clauses);
  return j;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string placement_to_json(const Placement& p) { return emit(placement_json(p)); }

Placement placement_from_json(std::string_view text) {
  const Json j = parse(text);
  try {
    const Json& nodes = j.at("nodes");
    if (!nodes.is_array()) throw Error(ErrorKind::kParse, "\"nodes\" must be an array");
    Placement p(static_cast<int>(nodes.size()));
    for (const Json& n : nodes) {
      const int id = n.at("id").get<int>();
      if (id < 0 || id >= p.size()) throw Error(ErrorKind::kParse, "node id " + std::to_string(id) + " out of range");
      if (p.cells[static_cast<std::size_t>(id)]) {
        throw Error(ErrorKind::kParse, "node id " + std::to_string(id) + " listed twice");
      }
      p.set(id, Cell{n.at("q").get<int>(), n.at("r").get<int>()});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed placement: ") + e.what());
  }
}

std::string verdict_to_json(const Verdict& v) {
  Json j;
  j["realizable"] = v.realizable;
  j["mode"] = to_string(v.mode);
  if (v.failing_window) {
    j["failing_window"] = Json::array({v.failing_window->first, v.failing_window->second});
  } else {
    j["failing_window"] = nullptr;
  }
  if (v.witness) j["witness"] = placement_json(*v.witness);
  return emit(j);
}

std::string gadget_to_json(const GadgetGraph& g) {
  Json j;
  j["node_count"] = g.tree.node_count();
  j["edges"] = edges_json(g.tree);
  Json anchors = Json::object();
  for (const auto& [name, node] : g.anchors) anchors[name] = node;
  j["anchors"] = std::move(anchors);
  j["red"] = g.red;
  j["layout"] = placement_json(Placement(g.layout));
  return emit(j);
}

std::string engine_to_json(const EngineTree& e) {
  Json j;
  j["formula"] = formula_json(e.formula);
  Json g;
  g["spine_hexagons"] = e.geometry.spine_hexagons;
  g["frame_gap_hexagons"] = e.geometry.frame_gap_hexagons;
  g["level_hexagons"] = e.geometry.level_hexagons;
  g["stagger_hexagons"] = e.geometry.stagger_hexagons;
  g["flag_hexagons"] = e.geometry.flag_hexagons;
  g["cap_radius"] = e.geometry.cap_radius;
  j["geometry"] = std::move(g);
  j["node_count"] = e.tree.node_count();
  j["edges"] = edges_json(e.tree);
  Json anchors = Json::array();
  for (const EngineAnchor& a : e.anchors) {
    Json x;
    x["kind"] = a.kind;
    x["pole"] = a.pole;
    x["level"] = a.level;
    if (a.part) {
      x["part"] = *a.part == Part::kPositive ? "positive" : "negative";
    } else {
      x["part"] = nullptr;
    }
    x["node"] = a.node;
    anchors.push_back(std::move(x));
  }
  j["anchors"] = std::move(anchors);
  return emit(j);
}

EngineTree engine_from_json(std::string_view text) {
  const Json j = parse(text);
  try {
    const Json& f = j.at("formula");
    const auto clauses = f.at("clauses").get<std::vector<std::vector<int>>>();
    const CnfFormula formula = CnfFormula::make(f.at("n").get<int>(), clauses);
    EngineGeometry geo;
    if (j.contains("geometry")) {
      const Json& g = j.at("geometry");
      geo.spine_hexagons = g.value("spine_hexagons", geo.spine_hexagons);
      geo.frame_gap_hexagons = g.value("frame_gap_hexagons", geo.frame_gap_hexagons);
      geo.level_hexagons = g.value("level_hexagons", geo.level_hexagons);
      geo.stagger_hexagons = g.value("stagger_hexagons", geo.stagger_hexagons);
      geo.flag_hexagons = g.value("flag_hexagons", geo.flag_hexagons);
      geo.cap_radius = g.value("cap_radius", geo.cap_radius);
    }
    EngineTree e = build_engine_tree(formula, geo);
    if (j.contains("edges")) {
      const auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
      if (j.value("node_count", e.tree.node_count()) != e.tree.node_count() || edges != e.tree.edges()) {
        throw Error(ErrorKind::kParse, "engine tree does not match the one compiled from its formula");
      }
    }
    return e;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed engine document: ") + e.what());
  }
}

std::string engine_decision_to_json(const EngineDecision& d) {
  Json j;
  j["realizable"] = d.realizable;
  if (d.flips) {
    Json flips = Json::array();
    for (bool b : *d.flips) flips.push_back(b ? 1 : 0);
    j["flips"] = std::move(flips);
  }
  if (d.placement) j["certificate"] = placement_json(*d.placement);
  return emit(j);
}

std::string nae_result_to_json(const std::optional<std::vector<bool>>& assignment) {
  Json j;
  j["satisfiable"] = assignment.has_value();
  if (assignment) {
    Json a = Json::array();
    for (bool b : *assignment) a.push_back(b ? 1 : 0);
    j["assignment"] = std::move(a);
  }
  return emit(j);
}

std::string oracle_report_to_json(const OracleReport& r) {
  Json j;
  j["node_count"] = r.node_count;
  j["placement_count"] = r.result.placements.size();
  j["exhaustive"] = r.result.exhaustive;
  if (r.distinguishable) j["distinguishable"] = *r.distinguishable;
  if (r.include_placements) {
    Json all = Json::array();
    for (const auto& c : r.result.placements) all.push_back(placement_json(c.to_placement()));
    j["placements"] = std::move(all);
  }
  return emit(j);
}

}  // namespace wudcr
