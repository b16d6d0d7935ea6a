#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wudcr/graph.hpp"
#include "wudcr/placement.hpp"

namespace wudcr {

struct Literal {
  int variable = 0;  // 1-based
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
};

/// A CNF formula with clauses of at most three distinct literals. Clauses are
/// stored as sorted sets; a clause may not contain a variable together with
/// its negation.
struct CnfFormula {
  int n = 0;
  std::vector<std::vector<Literal>> clauses;

  int m() const { return static_cast<int>(clauses.size()); }

  /// Builds a validated formula from DIMACS-style signed literals.
  static CnfFormula make(int n, const std::vector<std::vector<int>>& clauses);
};

CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

/// values[i] is the truth value of variable i + 1.
bool nae_satisfied(const CnfFormula& f, const std::vector<bool>& values);

/// Lexicographically first NAE assignment (x_1 most significant, false
/// before true), or nullopt. Throws Error(kTooManyVariables) when n > 24.
std::optional<std::vector<bool>> nae_solve_bruteforce(const CnfFormula& f);

enum class Part { kPositive, kNegative };
enum class Side { kTop, kBottom };

/// Flag rules: the positive part carries a flag at a level when the clause
/// contains the negated literal, the negative part when it contains the plain
/// literal, and both parts when the variable does not occur.
bool part_flagged(const CnfFormula& f, int variable, int level, Part part);

/// A pole with value true is not flipped and shows its positive part on top.
Side side_of(Part part, bool value);

struct FlagSlot {
  int variable = 0;  // 1-based
  int level = 0;     // 1-based clause index
  Side side = Side::kTop;

  auto operator<=>(const FlagSlot&) const = default;
};

struct EngineConfig {
  /// flips[i] is the value of x_{i+1}: true means the pole is not flipped.
  std::vector<bool> flips;
  /// Gap receiving each flag. Gap g lies between poles g and g + 1; pole 0
  /// and pole n + 1 are the frames.
  std::map<FlagSlot, int> flag_gap;
};

/// Layout constants, counted in hexagons of radius 3. Spine hexagons sit
/// between the branchings of neighbouring variable poles, frame-gap hexagons
/// between a frame and the outermost variable pole. Each variable pole is
/// longer than its right neighbour by the stagger.
struct EngineGeometry {
  int spine_hexagons = 1;
  int frame_gap_hexagons = 0;
  int level_hexagons = 1;
  int stagger_hexagons = 1;
  int flag_hexagons = 1;
  int cap_radius = 4;
};

struct EngineAnchor {
  std::string kind;  // cap, spine-branching, pole-part, flag-branching
  // Frames (pole 0 and n + 1) are straight walls without flag levels.
  int pole = -1;     // 0 and n + 1 are frames
  int level = 0;
  std::optional<Part> part;
  NodeId node = -1;
};

struct EngineTree {
  CnfFormula formula;
  EngineGeometry geometry;
  Tree tree;
  std::vector<EngineAnchor> anchors;
  std::vector<int> provenance;
  std::vector<std::string> instance_kinds;
};

EngineTree build_engine_tree(const CnfFormula& f, const EngineGeometry& geometry = {});

/// Matches flagged poles to gaps per level and side with the left-preferring
/// greedy; nullopt when some level side flags every pole.
std::optional<EngineConfig> assign_flags(const CnfFormula& f, const std::vector<bool>& flips);

/// Concrete cells for `cfg`. Throws Error(kLayoutBug) when the config cannot
/// be posed or the result fails validation.
Placement synthesize_layout(const EngineTree& e, const EngineConfig& cfg);

struct EngineDecision {
  bool realizable = false;
  std::optional<std::vector<bool>> flips;
  std::optional<Placement> placement;
};

/// Searches all 2^n flip vectors; the lexicographically first feasible one is
/// the certificate. Throws Error(kTooManyVariables) when n > 16.
EngineDecision decide_engine(const CnfFormula& f, int jobs = 1, const EngineGeometry& geometry = {});

}  // namespace wudcr
