#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wudcr/graph.hpp"
#include "wudcr/hexgrid.hpp"

namespace wudcr {

/// Node -> cell assignment. Validity (see validate) is exactly the weak
/// contact condition: distinct cells, and every tree edge between adjacent
/// cells. Non-edges may touch.
struct Placement {
  std::vector<std::optional<Cell>> cells;

  Placement() = default;
  explicit Placement(int node_count) : cells(static_cast<std::size_t>(node_count)) {}
  explicit Placement(const std::vector<Cell>& all);

  int size() const noexcept { return static_cast<int>(cells.size()); }
  bool complete() const;
  /// Throws Error(kMissingNode) when unassigned.
  Cell at(NodeId v) const;
  void set(NodeId v, Cell c) { cells.at(static_cast<std::size_t>(v)) = c; }
  /// All cells; throws Error(kMissingNode) if any node is unassigned.
  std::vector<Cell> dense() const;

  bool operator==(const Placement&) const = default;
};

struct Violation {
  enum class Kind { kOverlap, kNotTangent };
  Kind kind;
  NodeId a;
  NodeId b;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

/// Empty result means valid. Throws Error(kMissingNode) for incomplete input.
std::vector<Violation> validate(const Tree& t, const Placement& p);

/// Placement normalized over the 12 origin isometries after translating
/// node 0 to the origin; the lexicographically smallest cell vector wins.
struct CanonicalPlacement {
  std::vector<Cell> cells;

  Placement to_placement() const { return Placement(cells); }
  auto operator<=>(const CanonicalPlacement&) const = default;
};

CanonicalPlacement canonicalize(std::span<const Cell> cells);

struct SearchOptions {
  /// Stop after this many distinct canonical placements (in search order).
  std::optional<std::size_t> limit;
  /// Node-expansion budget; exceeding it throws Error(kTimeout).
  std::optional<std::uint64_t> budget;
  /// Search root pinned at the origin (default node 0).
  std::optional<NodeId> root;
  /// Marked nodes are never treated as interchangeable with other nodes.
  std::vector<NodeId> marked;
  /// Keep one representative per permutation of isomorphic, unmarked
  /// sibling subtrees. Disable to enumerate every labeled placement.
  bool break_sibling_symmetry = true;
  int jobs = 1;
};

struct SearchResult {
  /// Sorted, duplicate-free.
  std::vector<CanonicalPlacement> placements;
  std::uint64_t expansions = 0;
  bool exhaustive = true;
};

inline constexpr int kMaxSearchNodes = 200;

/// Exact backtracking search for grid placements. Root at the origin, its
/// first child at direction(0); results are deduplicated under all grid
/// isometries. Throws Error(kTooLarge) above kMaxSearchNodes nodes.
SearchResult embed_search(const Tree& t, const SearchOptions& options = {});

std::optional<Placement> find_placement(const Tree& t, SearchOptions options = {});

/// Number of classes of marked-node image tuples under orientation-preserving
/// grid motions, taken over the placements and their mirror images (the
/// canonical set stores one of each mirror pair). Two realizations that are
/// mirror images with respect to the marked nodes are distinguishable. An
/// empty marking yields 1 for a non-empty set.
int distinguishable_count(std::span<const CanonicalPlacement> placements, std::span<const NodeId> marked);

/// Marked-node tuple normalized under rotations and translation.
std::vector<Cell> canonical_marked_tuple(std::span<const Cell> tuple);

}  // namespace wudcr
