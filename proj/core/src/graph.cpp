#include "wudcr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "wudcr/error.hpp"

namespace wudcr {

Tree Tree::from_edges(int node_count, std::vector<Edge> edges) {
  if (node_count < 1) throw Error(ErrorKind::kNotATree, "a tree needs at least one node");
  if (static_cast<long long>(edges.size()) != static_cast<long long>(node_count) - 1) {
    throw Error(ErrorKind::kNotATree, "expected " + std::to_string(node_count - 1) + " edges, got " +
                                          std::to_string(edges.size()));
  }
  Tree t;
  t.node_count_ = node_count;
  std::vector<int> deg(static_cast<std::size_t>(node_count), 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw Error(ErrorKind::kNotATree, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw Error(ErrorKind::kNotATree, "self-loop at node " + std::to_string(u));
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  t.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (int v = 0; v < node_count; ++v) t.offsets_[static_cast<std::size_t>(v) + 1] = t.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  t.adjacency_.assign(static_cast<std::size_t>(t.offsets_.back()), 0);
  std::vector<int> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (auto& [u, v] : edges) {
    t.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = v;
    t.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int v = 0; v < node_count; ++v) {
    auto b = t.adjacency_.begin() + t.offsets_[static_cast<std::size_t>(v)];
    auto e = t.adjacency_.begin() + t.offsets_[static_cast<std::size_t>(v) + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e) {
      throw Error(ErrorKind::kNotATree, "duplicate edge at node " + std::to_string(v));
    }
  }
  // n - 1 edges and connected implies acyclic.
  std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != node_count) throw Error(ErrorKind::kNotATree, "graph is disconnected or contains a cycle");
  t.edges_ = std::move(edges);
  return t;
}

bool Tree::has_edge(NodeId a, NodeId b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

void Tree::set_label(NodeId v, std::string label) {
  if (labels_.empty()) labels_.resize(static_cast<std::size_t>(node_count_));
  labels_.at(static_cast<std::size_t>(v)) = std::move(label);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<int, std::string>> labels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const auto where = "line " + std::to_string(line_no) + ": ";
    auto tok = split_ws(line);
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !parse_int(tok[1], n) || n < 1) {
        throw Error(ErrorKind::kParse, where + "expected header 'n <count>'");
      }
      continue;
    }
    if (tok[0] == "label") {
      int id = 0;
      if (tok.size() < 3 || !parse_int(tok[1], id) || id < 0 || id >= n) {
        throw Error(ErrorKind::kParse, where + "expected 'label <id> <text>'");
      }
      auto rest = line.substr(static_cast<std::size_t>(tok[2].data() - line.data()));
      labels.emplace_back(id, std::string(rest));
      continue;
    }
    int u = 0;
    int v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v)) {
      throw Error(ErrorKind::kParse, where + "expected '<u> <v>'");
    }
    edges.emplace_back(u, v);
    if (nl == text.size()) break;
  }
  if (n < 0) throw Error(ErrorKind::kParse, "missing header 'n <count>'");
  Tree t = Tree::from_edges(n, std::move(edges));
  for (auto& [id, label] : labels) t.set_label(id, std::move(label));
  return t;
}

std::string to_edge_list(const Tree& t) {
  std::string out = "n " + std::to_string(t.node_count()) + "\n";
  for (const auto& [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  if (!t.labels().empty()) {
    for (int v = 0; v < t.node_count(); ++v) {
      const auto& l = t.labels()[static_cast<std::size_t>(v)];
      if (!l.empty()) out += "label " + std::to_string(v) + " " + l + "\n";
    }
  }
  return out;
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.node_count(); ++v) best = std::max(best, t.degree(v));
  return best;
}

std::vector<int> bfs_distances(const Tree& t, NodeId source) {
  std::vector<int> dist(static_cast<std::size_t>(t.node_count()), -1);
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(t.node_count()));
  queue.push_back(source);
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : t.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// Breadth-first search that records parents only. BFS order lists nodes by
// nondecreasing distance, so the last level is a suffix of the queue; the
// smallest id on it is returned together with its distance.
std::pair<NodeId, int> farthest_from(const Tree& t, NodeId source, std::vector<NodeId>& parent,
                                     std::vector<NodeId>& queue) {
  parent.assign(static_cast<std::size_t>(t.node_count()), -1);
  queue.clear();
  queue.push_back(source);
  parent[static_cast<std::size_t>(source)] = source;
  std::size_t level_start = 0;
  int depth = -1;
  for (std::size_t head = 0; head < queue.size(); ++depth) {
    const std::size_t level_end = queue.size();
    level_start = head;
    for (; head < level_end; ++head) {
      const NodeId v = queue[head];
      for (NodeId w : t.neighbors(v)) {
        if (parent[static_cast<std::size_t>(w)] < 0) {
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
  }
  return {*std::min_element(queue.begin() + static_cast<std::ptrdiff_t>(level_start), queue.end()), depth};
}

// Large trees make every fresh n-sized buffer cost page faults, so the
// decomposition shares these scratch vectors with the path search.
std::vector<NodeId> longest_path(const Tree& t, std::vector<NodeId>& parent, std::vector<NodeId>& queue) {
  if (t.node_count() < 2) throw Error(ErrorKind::kTooSmall, "longest path needs at least two nodes");
  queue.reserve(static_cast<std::size_t>(t.node_count()));
  const NodeId a = farthest_from(t, 0, parent, queue).first;
  const auto [b, length] = farthest_from(t, a, parent, queue);
  std::vector<NodeId> path(static_cast<std::size_t>(length) + 1);
  NodeId v = b;
  for (std::size_t i = path.size(); i-- > 0;) {
    path[i] = v;
    v = parent[static_cast<std::size_t>(v)];
  }
  return path;
}

}  // namespace

std::vector<NodeId> longest_path(const Tree& t) {
  std::vector<NodeId> parent;
  std::vector<NodeId> queue;
  return longest_path(t, parent, queue);
}

Spine Spine::reversed() const {
  Spine s;
  s.path.assign(path.rbegin(), path.rend());
  s.internal.assign(internal.rbegin(), internal.rend());
  s.internal_degrees.assign(internal_degrees.rbegin(), internal_degrees.rend());
  return s;
}

Spine Spine::from_degrees(std::vector<int> degrees) {
  Spine s;
  const int k = static_cast<int>(degrees.size());
  for (int i = 0; i <= k + 1; ++i) s.path.push_back(i);
  for (int i = 1; i <= k; ++i) s.internal.push_back(i);
  s.internal_degrees = std::move(degrees);
  return s;
}

Spine caterpillar_decompose(const Tree& t) {
  Spine s;
  std::vector<NodeId> on_path;
  {
    std::vector<NodeId> queue;
    s.path = longest_path(t, on_path, queue);
  }
  std::fill(on_path.begin(), on_path.end(), 0);
  for (NodeId v : s.path) on_path[static_cast<std::size_t>(v)] = 1;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (on_path[static_cast<std::size_t>(v)]) continue;
    bool touches = false;
    for (NodeId w : t.neighbors(v)) touches = touches || on_path[static_cast<std::size_t>(w)] != 0;
    if (!touches) {
      throw Error(ErrorKind::kNotACaterpillar, "node " + std::to_string(v) + " is at distance >= 2 from the longest path");
    }
  }
  if (s.path.size() == 2) {
    s.internal = {s.path[1]};
  } else {
    s.internal.assign(s.path.begin() + 1, s.path.end() - 1);
  }
  s.internal_degrees.reserve(s.internal.size());
  for (NodeId v : s.internal) s.internal_degrees.push_back(t.degree(v));
  return s;
}

bool is_caterpillar_by_leaf_deletion(const Tree& t) {
  const int n = t.node_count();
  if (n <= 2) return true;
  // Among non-leaves, every node must have at most two non-leaf neighbors,
  // and the non-leaf subgraph (a subtree) must then be a path.
  for (NodeId v = 0; v < n; ++v) {
    if (t.degree(v) <= 1) continue;
    int inner = 0;
    for (NodeId w : t.neighbors(v)) inner += t.degree(w) > 1 ? 1 : 0;
    if (inner > 2) return false;
  }
  return true;
}

Tree caterpillar_from_degrees(const std::vector<int>& degrees) {
  const int k = static_cast<int>(degrees.size());
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) edges.emplace_back(i, i + 1);
  int next = k + 2;
  for (int i = 1; i <= k; ++i) {
    const int extra = degrees[static_cast<std::size_t>(i - 1)] - 2;
    for (int j = 0; j < extra; ++j) edges.emplace_back(i, next++);
  }
  return Tree::from_edges(next, std::move(edges));
}

Tree path_tree(int nodes) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < nodes; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(nodes, std::move(edges));
}

Tree star_tree(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(leaves + 1, std::move(edges));
}

Tree random_caterpillar(int nodes, int max_internal_degree, std::mt19937_64& rng) {
  if (nodes <= 2) return path_tree(std::max(nodes, 1));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(nodes));
  std::uniform_int_distribution<int> extra_dist(0, std::max(0, max_internal_degree - 2));
  edges.emplace_back(0, 1);
  int next = 2;
  NodeId current = 1;
  int remaining = nodes - 2;
  while (remaining > 0) {
    const int extra = std::min(extra_dist(rng), remaining - 1);
    for (int j = 0; j < extra; ++j) edges.emplace_back(current, next++);
    remaining -= extra;
    edges.emplace_back(current, next);
    current = next++;
    --remaining;
  }
  return Tree::from_edges(nodes, std::move(edges));
}

namespace {

std::string ahu(const Tree& t, NodeId v, NodeId parent) {
  std::vector<std::string> kids;
  for (NodeId w : t.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<NodeId> centers(const Tree& t) {
  const int n = t.node_count();
  if (n <= 2) {
    std::vector<NodeId> all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<NodeId> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<NodeId> next;
    for (NodeId v : layer) {
      for (NodeId w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Tree& t) {
  std::string best;
  for (NodeId c : centers(t)) {
    auto s = ahu(t, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Tree> enumerate_trees(int nodes) {
  if (nodes < 1 || nodes > 12) throw Error(ErrorKind::kTooLarge, "enumerate_trees supports 1..12 nodes");
  std::vector<Tree> level{Tree::from_edges(1, {})};
  for (int n = 2; n <= nodes; ++n) {
    std::set<std::string> seen;
    std::vector<Tree> next;
    for (const Tree& t : level) {
      for (NodeId v = 0; v < t.node_count(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, n - 1);
        Tree grown = Tree::from_edges(n, std::move(edges));
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  // Relabel in BFS order from the first center.
  std::vector<Tree> out;
  for (const Tree& t : level) {
    const NodeId root = centers(t).front();
    std::vector<NodeId> order{root};
    std::vector<NodeId> new_id(static_cast<std::size_t>(t.node_count()), -1);
    new_id[static_cast<std::size_t>(root)] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (NodeId w : t.neighbors(order[h])) {
        if (new_id[static_cast<std::size_t>(w)] < 0) {
          new_id[static_cast<std::size_t>(w)] = static_cast<NodeId>(order.size());
          order.push_back(w);
        }
      }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : t.edges()) {
      int a = new_id[static_cast<std::size_t>(u)];
      int b = new_id[static_cast<std::size_t>(v)];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(Tree::from_edges(t.node_count(), std::move(edges)));
  }
  return out;
}

}  // namespace wudcr
