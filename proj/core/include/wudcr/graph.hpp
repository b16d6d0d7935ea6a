#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wudcr {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected tree with nodes 0..node_count-1. Construction validates
/// treeness; a Tree value is always connected and acyclic.
class Tree {
 public:
  /// The single-node tree.
  Tree() : node_count_(1), offsets_{0, 0} {}

  /// Throws Error(kNotATree) on cycles, disconnection, self-loops,
  /// duplicate edges or out-of-range ids.
  static Tree from_edges(int node_count, std::vector<Edge> edges);

  int node_count() const noexcept { return node_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors in ascending id order.
  std::span<const NodeId> neighbors(NodeId v) const {
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return {adjacency_.data() + b, e - b};
  }
  int degree(NodeId v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }
  bool has_edge(NodeId a, NodeId b) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(NodeId v, std::string label);

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<std::string> labels_;
};

/// Grammar (one record per line, '#' starts a comment, blank lines ignored):
///   n <count>          -- first record, count >= 1
///   <u> <v>            -- one edge per line, 0-based ids
///   label <id> <text>  -- optional node label (rest of line)
Tree parse_edge_list(std::string_view text);
std::string to_edge_list(const Tree& t);

int max_degree(const Tree& t);

/// Distances from `source` by breadth-first search (neighbors in ascending id order).
std::vector<int> bfs_distances(const Tree& t, NodeId source);

/// Diameter path by double BFS; ties go to the smallest node id.
/// Throws Error(kTooSmall) for single-node trees.
std::vector<NodeId> longest_path(const Tree& t);

/// Central path of a caterpillar. `internal` holds v_1..v_k; for a single
/// edge (k = 0) the second endpoint stands in as the lone internal node.
struct Spine {
  std::vector<NodeId> path;
  std::vector<NodeId> internal;
  std::vector<int> internal_degrees;

  int k() const noexcept { return static_cast<int>(internal_degrees.size()); }
  Spine reversed() const;
  /// A detached spine carrying only degrees (node ids 1..k, endpoints 0 and k+1).
  static Spine from_degrees(std::vector<int> degrees);
};

/// Throws Error(kTooSmall) for single nodes and Error(kNotACaterpillar) when
/// some node lies at distance >= 2 from the longest path.
Spine caterpillar_decompose(const Tree& t);

/// Independent caterpillar test: removing all leaves leaves a path (or nothing).
bool is_caterpillar_by_leaf_deletion(const Tree& t);

/// Caterpillar with spine v_0 = 0, v_1..v_k = 1..k, v_{k+1} = k+1 and the
/// extra leaves of v_i numbered consecutively afterwards. degrees[i] >= 2
/// (>= 1 when k == 1).
Tree caterpillar_from_degrees(const std::vector<int>& degrees);

Tree path_tree(int nodes);
Tree star_tree(int leaves);

/// Random caterpillar with exactly `nodes` nodes whose internal degrees are
/// drawn from [2, max_internal_degree] (clamped so the total fits).
Tree random_caterpillar(int nodes, int max_internal_degree, std::mt19937_64& rng);

/// Canonical string of the unrooted tree (center-rooted AHU); equal strings
/// iff isomorphic.
std::string tree_canonical_form(const Tree& t);

/// All unlabeled trees with exactly `nodes` nodes (nodes <= 12), relabeled in
/// BFS order from a center so every non-root node has a smaller-id parent.
std::vector<Tree> enumerate_trees(int nodes);

}  // namespace wudcr
