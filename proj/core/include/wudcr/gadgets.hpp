#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wudcr/graph.hpp"
#include "wudcr/hexgrid.hpp"

namespace wudcr {

/// A tree whose grid realizations are the filled hexagon of the given radius
/// with the red path on a diameter.
///
/// Node 0 is the center; ring k occupies ids 1 + 3k(k-1) ... 3k(k+1) in
/// ring() order. Parenting: corner cells hang off the previous ring's corner;
/// the two red corner chains (directions 0 and 3) have exactly one child per
/// node, which forces them straight; the other corners of rings 1..r-1 adopt
/// their two flanking cells too whenever those are not claimed otherwise;
/// remaining edge cells hang off the inner neighbor to their left.
struct HexagonSpec {
  int radius = 0;
  Tree tree;
  /// Reference realization: center at the origin, red path along direction 0.
  std::vector<Cell> layout;
  /// Red path from the direction-3 corner through the center to the direction-0 corner.
  std::vector<NodeId> red_path;
  /// Nodes with exactly three children.
  std::vector<NodeId> green;
  /// Ring-r corner node in each direction.
  std::array<NodeId, 6> corners{};

  NodeId end_a() const { return red_path.front(); }
  NodeId end_b() const { return red_path.back(); }
  std::vector<int> level_sizes() const;
};

/// Throws Error(kRadiusTooSmall) for r < 3.
HexagonSpec hexagon_tree(int r);

/// Tree plus a reference layout and named anchor nodes.
struct GadgetGraph {
  Tree tree;
  std::vector<Cell> layout;
  std::map<std::string, NodeId> anchors;
  /// Marked vertices: red-path endpoints of every hexagon and all anchors.
  std::vector<NodeId> red;
  /// Gadget instance (hexagon or path) each node was created by.
  std::vector<int> provenance;
  std::vector<std::string> instance_kinds;

  NodeId anchor(const std::string& name) const;
  bool is_red(NodeId v) const;
};

GadgetGraph hexagon_gadget(int r);

/// Identify endpoint_a of `a` with endpoint_b of `b` (one shared disk). Both
/// must be red leaves. Anchors of `b` that collide with names in `a` get a
/// "b." prefix; the two identified anchors are dropped. The reference layout
/// of `b` is moved by the first grid isometry (in point_group order) that
/// yields a valid joint layout.
GadgetGraph chain(const GadgetGraph& a, NodeId endpoint_a, const GadgetGraph& b, NodeId endpoint_b);

/// Smallest trunk length for which the oracle reports exactly two
/// distinguishable realizations (frozen by a regression test).
inline constexpr int kFrozenTrunkLength = 3;

struct BranchingParams {
  int radius = 3;
  /// Path nodes strictly between the junction and the trunk-out hexagon.
  int trunk_length = kFrozenTrunkLength;
};

/// The junction is the direction-0 red corner of the trunk hexagon H0
/// (anchor "trunk-in" at its direction-3 corner). It gets three children that
/// fill its free neighbours: the entry corners of two branch hexagons along
/// 60 and 300 degrees ("branch-A", "branch-B" at their far corners) and a
/// path of trunk_length nodes ending in a last hexagon ("trunk-out").
/// Throws Error(kParamsInfeasible) when the reference layout collides.
GadgetGraph branching_gadget(const BranchingParams& params = {});

/// Incrementally composes hexagons and paths under explicit poses. The tree
/// structure depends only on the sequence of calls, never on the poses, so
/// replaying the same calls with other poses yields the same node numbering
/// with a different layout.
class GadgetBuilder {
 public:
  int new_instance(std::string kind);
  NodeId add_node(Cell c, int instance);
  void add_edge(NodeId a, NodeId b);

  /// Adds hexagon `h` transformed by `pose`. If `join` = (local, global) is
  /// given, local node `local` is identified with existing node `global`;
  /// a cell mismatch is recorded as a join conflict. Returns local -> global.
  std::vector<NodeId> add_hexagon(const HexagonSpec& h, const Isometry& pose, int instance,
                                  std::optional<std::pair<NodeId, NodeId>> join = std::nullopt);

  /// Path of `edges` edges starting at existing node `from`, stepping in
  /// `dir`; returns the new nodes (edges - 1 interior nodes plus the end).
  std::vector<NodeId> add_path(NodeId from, Cell dir, int edges, int instance);

  /// Branching gadget built from hexagon `h` in its local frame (H0 centered
  /// at the origin, trunk along direction 0) and moved by `pose`. When
  /// `join_trunk_in` is set, H0's entry corner is identified with that node.
  /// A non-null `shared_h0` (local -> global map of an already placed
  /// hexagon whose red axis lies on the trunk) serves as H0 instead.
  struct Branching {
    NodeId trunk_in = -1;
    NodeId junction = -1;
    NodeId trunk_out = -1;
    NodeId branch_a = -1;
    NodeId branch_b = -1;
    std::vector<NodeId> red;
    std::vector<NodeId> ha, hb, h3;  // local -> global per hexagon
  };
  Branching add_branching(const HexagonSpec& h, int trunk_length, const Isometry& pose,
                          std::optional<NodeId> join_trunk_in = std::nullopt,
                          const std::vector<NodeId>* shared_h0 = nullptr);

  Cell cell(NodeId v) const { return layout_.at(static_cast<std::size_t>(v)); }
  int node_count() const { return static_cast<int>(layout_.size()); }
  const std::vector<Cell>& layout() const { return layout_; }
  const std::vector<std::string>& join_conflicts() const { return conflicts_; }
  const std::vector<int>& provenance() const { return provenance_; }
  const std::vector<std::string>& instance_kinds() const { return kinds_; }
  Tree tree() const;

 private:
  std::vector<Cell> layout_;
  std::vector<int> provenance_;
  std::vector<Edge> edges_;
  std::vector<std::string> kinds_;
  std::vector<std::string> conflicts_;
};

/// Pose placing hexagon `h` so its center is `center` and its direction-0
/// red end points towards direction(dir); `mirror` reflects the hexagon
/// across its red axis first.
Isometry hexagon_pose(Cell center, int dir, bool mirror = false);

}  // namespace wudcr
