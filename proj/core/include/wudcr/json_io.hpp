#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wudcr/gadgets.hpp"
#include "wudcr/logicengine.hpp"
#include "wudcr/placement.hpp"
#include "wudcr/recognizer.hpp"

namespace wudcr {

// All writers emit one compact JSON document followed by a newline, with keys
// in a fixed order, so equal inputs give equal bytes.

/// {"nodes":[{"id":0,"q":0,"r":0},...]} in ascending id order.
std::string placement_to_json(const Placement& p);
/// Accepts any node order; every id in 0..count-1 must appear exactly once.
/// Throws Error(kParse).
Placement placement_from_json(std::string_view text);

/// {"realizable":..,"mode":..,"failing_window":[p,q]|null,"witness":{...}}
/// (witness only when present).
std::string verdict_to_json(const Verdict& v);

std::string gadget_to_json(const GadgetGraph& g);

/// Formula, geometry, edge list and anchors of a compiled engine.
std::string engine_to_json(const EngineTree& e);
/// Reads the output of engine_to_json. The tree is rebuilt from the formula
/// and geometry and must match the stored edges; Error(kParse) otherwise.
EngineTree engine_from_json(std::string_view text);

std::string engine_decision_to_json(const EngineDecision& d);

/// {"satisfiable":false} or {"satisfiable":true,"assignment":[0,1,...]}.
std::string nae_result_to_json(const std::optional<std::vector<bool>>& assignment);

struct OracleReport {
  int node_count = 0;
  SearchResult result;
  std::optional<int> distinguishable;
  bool include_placements = false;
};
std::string oracle_report_to_json(const OracleReport& r);

}  // namespace wudcr
