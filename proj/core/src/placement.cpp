#include "wudcr/placement.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "wudcr/error.hpp"

namespace wudcr {

Placement::Placement(const std::vector<Cell>& all) : cells(all.begin(), all.end()) {}

bool Placement::complete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); });
}

Cell Placement::at(NodeId v) const {
  if (v < 0 || v >= size() || !cells[static_cast<std::size_t>(v)]) {
    throw Error(ErrorKind::kMissingNode, "node " + std::to_string(v) + " has no cell");
  }
  return *cells[static_cast<std::size_t>(v)];
}

std::vector<Cell> Placement::dense() const {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (int v = 0; v < size(); ++v) out.push_back(at(v));
  return out;
}

std::string Violation::describe() const {
  if (kind == Kind::kOverlap) {
    return "overlap: nodes " + std::to_string(a) + " and " + std::to_string(b) + " share a cell";
  }
  return "edge not tangent: " + std::to_string(a) + "-" + std::to_string(b);
}

std::vector<Violation> validate(const Tree& t, const Placement& p) {
  if (p.size() != t.node_count()) {
    throw Error(ErrorKind::kMissingNode, "placement has " + std::to_string(p.size()) + " entries for " +
                                             std::to_string(t.node_count()) + " nodes");
  }
  std::vector<Violation> out;
  std::unordered_map<Cell, NodeId, CellHash> owner;
  owner.reserve(static_cast<std::size_t>(t.node_count()) * 2);
  for (NodeId v = 0; v < t.node_count(); ++v) {
    auto [it, fresh] = owner.emplace(p.at(v), v);
    if (!fresh) out.push_back({Violation::Kind::kOverlap, it->second, v});
  }
  for (const auto& [u, v] : t.edges()) {
    if (!adjacent(p.at(u), p.at(v))) out.push_back({Violation::Kind::kNotTangent, u, v});
  }
  return out;
}

CanonicalPlacement canonicalize(std::span<const Cell> cells) {
  CanonicalPlacement best;
  if (cells.empty()) return best;
  const Cell shift = -cells.front();
  std::vector<Cell> candidate(cells.size());
  bool first = true;
  for (const Isometry& g : point_group()) {
    for (std::size_t i = 0; i < cells.size(); ++i) candidate[i] = g.apply(cells[i] + shift);
    if (first || candidate < best.cells) {
      best.cells = candidate;
      first = false;
    }
  }
  return best;
}

std::vector<Cell> canonical_marked_tuple(std::span<const Cell> tuple) {
  std::vector<Cell> best;
  if (tuple.empty()) return best;
  std::vector<Cell> candidate(tuple.size());
  for (int rot = 0; rot < 6; ++rot) {
    const Cell anchor = rotate60(tuple.front(), rot);
    for (std::size_t i = 0; i < tuple.size(); ++i) candidate[i] = rotate60(tuple[i], rot) - anchor;
    if (rot == 0 || candidate < best) best = candidate;
  }
  return best;
}

int distinguishable_count(std::span<const CanonicalPlacement> placements, std::span<const NodeId> marked) {
  if (placements.empty()) return 0;
  if (marked.empty()) return 1;
  std::set<std::vector<Cell>> classes;
  std::vector<Cell> tuple(marked.size());
  for (const auto& p : placements) {
    for (int mirror = 0; mirror < 2; ++mirror) {
      for (std::size_t i = 0; i < marked.size(); ++i) {
        const Cell c = p.cells.at(static_cast<std::size_t>(marked[i]));
        tuple[i] = mirror ? reflect_x(c) : c;
      }
      classes.insert(canonical_marked_tuple(tuple));
    }
  }
  return static_cast<int>(classes.size());
}

namespace {

// Capacity checks look this many levels below a placed node.
constexpr int kHorizon = 4;
using Levels = std::array<int, kHorizon + 1>;

struct Plan {
  int n = 0;
  std::vector<NodeId> order;
  std::vector<NodeId> parent;
  std::vector<int> depth;
  std::vector<int> height;
  std::vector<Levels> descendants;  // [j] = descendants at relative depth 1..j
  std::vector<NodeId> order_pred;   // sibling whose cell must compare smaller
  std::vector<Cell> horizon_offsets;
  std::vector<int> horizon_dist;
};

Plan make_plan(const Tree& t, const SearchOptions& opt) {
  Plan plan;
  const int n = t.node_count();
  plan.n = n;
  const NodeId root = opt.root.value_or(0);
  if (root < 0 || root >= n) throw Error(ErrorKind::kMissingNode, "search root out of range");

  plan.parent.assign(static_cast<std::size_t>(n), -1);
  plan.depth.assign(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> bfs{root};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t h = 0; h < bfs.size(); ++h) {
    const NodeId v = bfs[h];
    for (NodeId w : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        plan.parent[static_cast<std::size_t>(w)] = v;
        plan.depth[static_cast<std::size_t>(w)] = plan.depth[static_cast<std::size_t>(v)] + 1;
        bfs.push_back(w);
      }
    }
  }

  std::vector<char> is_marked(static_cast<std::size_t>(n), 0);
  for (NodeId m : opt.marked) {
    if (m >= 0 && m < n) is_marked[static_cast<std::size_t>(m)] = 1;
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  plan.height.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> has_mark(is_marked);
  std::vector<int> shape(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(n));
  std::map<std::vector<int>, int> shape_ids;
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const NodeId v = *it;
    const auto vi = static_cast<std::size_t>(v);
    std::vector<int> key;
    for (NodeId w : t.neighbors(v)) {
      if (w == plan.parent[vi]) continue;
      const auto wi = static_cast<std::size_t>(w);
      children[vi].push_back(w);
      size[vi] += size[wi];
      plan.height[vi] = std::max(plan.height[vi], plan.height[wi] + 1);
      has_mark[vi] = static_cast<char>(has_mark[vi] || has_mark[wi]);
      key.push_back(shape[wi]);
    }
    std::sort(key.begin(), key.end());
    shape[vi] = shape_ids.emplace(std::move(key), static_cast<int>(shape_ids.size())).first->second;
  }
  for (auto& kids : children) {
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      const auto ai = static_cast<std::size_t>(a);
      const auto bi = static_cast<std::size_t>(b);
      if (size[ai] != size[bi]) return size[ai] > size[bi];
      if (shape[ai] != shape[bi]) return shape[ai] < shape[bi];
      return a < b;
    });
  }

  // A node's children are placed together, then the walk descends into the
  // smallest child subtree first so that dense blocks are completed before
  // the search moves on to the next one.
  plan.order = {root};
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    const auto& kids = children[static_cast<std::size_t>(v)];
    for (NodeId w : kids) plan.order.push_back(w);
    std::vector<NodeId> descend(kids.begin(), kids.end());
    std::stable_sort(descend.begin(), descend.end(), [&](NodeId a, NodeId b) {
      return size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)];
    });
    for (auto it = descend.rbegin(); it != descend.rend(); ++it) stack.push_back(*it);
  }

  plan.order_pred.assign(static_cast<std::size_t>(n), -1);
  if (opt.break_sibling_symmetry) {
    const NodeId pinned = n > 1 ? plan.order[1] : -1;
    for (const auto& kids : children) {
      for (std::size_t i = 1; i < kids.size(); ++i) {
        const auto a = static_cast<std::size_t>(kids[i - 1]);
        const auto b = static_cast<std::size_t>(kids[i]);
        if (kids[i - 1] == pinned || has_mark[a] || has_mark[b] || shape[a] != shape[b]) continue;
        plan.order_pred[b] = kids[i - 1];
      }
    }
  }

  plan.descendants.assign(static_cast<std::size_t>(n), Levels{});
  for (NodeId v = 0; v < n; ++v) {
    NodeId a = plan.parent[static_cast<std::size_t>(v)];
    for (int d = 1; a >= 0 && d <= kHorizon; ++d, a = plan.parent[static_cast<std::size_t>(a)]) {
      for (int j = d; j <= kHorizon; ++j) ++plan.descendants[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
    }
  }
  for (Cell c : ball({0, 0}, kHorizon)) {
    plan.horizon_offsets.push_back(c);
    plan.horizon_dist.push_back(grid_distance({0, 0}, c));
  }
  return plan;
}

struct Shared {
  const Plan* plan = nullptr;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> budget;
  std::atomic<std::uint64_t> expansions{0};
  std::atomic<bool> timed_out{false};
};

class Searcher {
 public:
  explicit Searcher(Shared& shared)
      : shared_(shared), plan_(*shared.plan), radius_(plan_.n + kHorizon + 2), side_(2 * radius_ + 1) {
    grid_.assign(static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_), -1);
    cell_of_.assign(static_cast<std::size_t>(plan_.n), Cell{});
    placed_.assign(static_cast<std::size_t>(plan_.n), 0);
    pending_ = plan_.descendants;
  }

  /// Replays a prefix of the placement order; false if it is infeasible.
  bool load_prefix(const std::vector<Cell>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!place(plan_.order[i], prefix[i])) return false;
    }
    depth_ = prefix.size();
    return true;
  }

  void run_full() {
    if (place(plan_.order[0], Cell{0, 0})) {
      depth_ = 1;
      dfs(1);
    }
  }

  void run_from_prefix() { dfs(depth_); }

  /// Enumerate feasible prefixes of the given length in DFS order.
  std::vector<std::vector<Cell>> prefixes(std::size_t length) {
    collect_len_ = length;
    collecting_ = true;
    if (place(plan_.order[0], Cell{0, 0})) dfs(1);
    collecting_ = false;
    return std::move(collected_prefixes_);
  }

  std::vector<CanonicalPlacement>& found() { return found_; }

 private:
  std::size_t idx(Cell c) const {
    return static_cast<std::size_t>(c.q + radius_) * static_cast<std::size_t>(side_) + static_cast<std::size_t>(c.r + radius_);
  }
  bool free(Cell c) const { return grid_[idx(c)] < 0; }

  bool capacity_ok(NodeId u) const {
    const auto ui = static_cast<std::size_t>(u);
    const int top = std::min(plan_.height[ui], kHorizon);
    if (top == 0 || pending_[ui][static_cast<std::size_t>(top)] == 0) return true;
    std::array<int, kHorizon + 1> free_at{};
    const Cell center = cell_of_[ui];
    for (std::size_t k = 1; k < plan_.horizon_offsets.size(); ++k) {
      if (plan_.horizon_dist[k] > top) break;
      if (free(center + plan_.horizon_offsets[k])) ++free_at[static_cast<std::size_t>(plan_.horizon_dist[k])];
    }
    int cumulative = 0;
    for (int j = 1; j <= top; ++j) {
      cumulative += free_at[static_cast<std::size_t>(j)];
      if (pending_[ui][static_cast<std::size_t>(j)] > cumulative) return false;
    }
    return true;
  }

  void adjust_pending(NodeId v, int delta) {
    NodeId a = plan_.parent[static_cast<std::size_t>(v)];
    for (int d = 1; a >= 0 && d <= kHorizon; ++d, a = plan_.parent[static_cast<std::size_t>(a)]) {
      auto& lv = pending_[static_cast<std::size_t>(a)];
      for (int j = d; j <= kHorizon; ++j) lv[static_cast<std::size_t>(j)] += delta;
    }
  }

  bool place(NodeId v, Cell c) {
    const auto vi = static_cast<std::size_t>(v);
    grid_[idx(c)] = v;
    cell_of_[vi] = c;
    placed_[vi] = 1;
    adjust_pending(v, -1);
    bool ok = capacity_ok(v);
    for (std::size_t k = 1; ok && k < plan_.horizon_offsets.size(); ++k) {
      const int owner = grid_[idx(c + plan_.horizon_offsets[k])];
      if (owner >= 0) ok = capacity_ok(owner);
    }
    if (!ok) unplace(v);
    return ok;
  }

  void unplace(NodeId v) {
    const auto vi = static_cast<std::size_t>(v);
    grid_[idx(cell_of_[vi])] = -1;
    placed_[vi] = 0;
    adjust_pending(v, +1);
  }

  bool stop() const {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    return shared_.limit && found_.size() >= *shared_.limit;
  }

  void record() {
    if (collecting_) {
      std::vector<Cell> prefix;
      for (std::size_t i = 0; i < collect_len_; ++i) prefix.push_back(cell_of_[static_cast<std::size_t>(plan_.order[i])]);
      collected_prefixes_.push_back(std::move(prefix));
      return;
    }
    CanonicalPlacement c = canonicalize(cell_of_);
    if (seen_.insert(c).second) found_.push_back(std::move(c));
  }

  void dfs(std::size_t i) {
    if (stop()) return;
    if ((collecting_ && i == collect_len_) || i == plan_.order.size()) {
      record();
      return;
    }
    const NodeId v = plan_.order[i];
    const auto vi = static_cast<std::size_t>(v);
    const Cell base = cell_of_[static_cast<std::size_t>(plan_.parent[vi])];
    const NodeId pred = plan_.order_pred[vi];
    // The root's first child is pinned to direction(0).
    const int dir_count = (i == 1) ? 1 : 6;
    for (int d = 0; d < dir_count; ++d) {
      const Cell c = base + direction(d);
      if (!free(c)) continue;
      if (pred >= 0 && !(cell_of_[static_cast<std::size_t>(pred)] < c)) continue;
      const auto used = shared_.expansions.fetch_add(1, std::memory_order_relaxed) + 1;
      if (shared_.budget && used > *shared_.budget) {
        shared_.timed_out.store(true);
        return;
      }
      if (!place(v, c)) continue;
      dfs(i + 1);
      unplace(v);
      if (stop()) return;
    }
  }

  Shared& shared_;
  const Plan& plan_;
  int radius_;
  int side_;
  std::vector<int> grid_;
  std::vector<Cell> cell_of_;
  std::vector<char> placed_;
  std::vector<Levels> pending_;
  std::size_t depth_ = 0;
  bool collecting_ = false;
  std::size_t collect_len_ = 0;
  std::vector<std::vector<Cell>> collected_prefixes_;
  std::set<CanonicalPlacement> seen_;
  std::vector<CanonicalPlacement> found_;
};

}  // namespace

SearchResult embed_search(const Tree& t, const SearchOptions& options) {
  if (t.node_count() > kMaxSearchNodes) {
    throw Error(ErrorKind::kTooLarge, "embed_search supports at most " + std::to_string(kMaxSearchNodes) + " nodes");
  }
  const Plan plan = make_plan(t, options);
  Shared shared;
  shared.plan = &plan;
  shared.limit = options.limit;
  shared.budget = options.budget;

  std::vector<std::vector<CanonicalPlacement>> parts;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || plan.n <= 3) {
    Searcher s(shared);
    s.run_full();
    parts.push_back(std::move(s.found()));
  } else {
    // Split on a prefix long enough to feed every worker, then search each
    // subtree independently; merging in prefix order reproduces the
    // sequential enumeration order.
    std::vector<std::vector<Cell>> prefixes;
    std::size_t length = 2;
    for (; length <= static_cast<std::size_t>(plan.n); ++length) {
      Searcher probe(shared);
      prefixes = probe.prefixes(length);
      if (prefixes.size() >= static_cast<std::size_t>(4 * jobs) || shared.timed_out) break;
    }
    parts.resize(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
        Searcher s(shared);
        if (s.load_prefix(prefixes[i])) s.run_from_prefix();
        parts[i] = std::move(s.found());
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (shared.timed_out) {
    throw Error(ErrorKind::kTimeout, "node-expansion budget of " + std::to_string(*options.budget) + " exceeded");
  }

  SearchResult result;
  std::set<CanonicalPlacement> merged;
  std::vector<CanonicalPlacement> ordered;
  for (auto& part : parts) {
    for (auto& c : part) {
      if (options.limit && ordered.size() >= *options.limit) break;
      if (merged.insert(c).second) ordered.push_back(c);
    }
  }
  result.exhaustive = !(options.limit && ordered.size() >= *options.limit);
  std::sort(ordered.begin(), ordered.end());
  result.placements = std::move(ordered);
  result.expansions = shared.expansions.load();
  return result;
}

std::optional<Placement> find_placement(const Tree& t, SearchOptions options) {
  options.limit = 1;
  auto r = embed_search(t, options);
  if (r.placements.empty()) return std::nullopt;
  return r.placements.front().to_placement();
}

}  // namespace wudcr
