#include "wudcr/gadgets.hpp"

#include <algorithm>

#include "wudcr/error.hpp"
#include "wudcr/placement.hpp"

namespace wudcr {

namespace {

NodeId ring_node(int k, int side, int t) {
  // t == k wraps to the next side's corner.
  if (k == 0) return 0;
  side = ((side % 6) + 6) % 6;
  if (t == k) {
    side = (side + 1) % 6;
    t = 0;
  }
  return 1 + 3 * k * (k - 1) + side * k + t;
}

bool red_side(int side) { return side % 3 == 0; }

}  // namespace

std::vector<int> HexagonSpec::level_sizes() const {
  const auto depth = bfs_distances(tree, 0);
  std::vector<int> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (int d : depth) ++sizes.at(static_cast<std::size_t>(d));
  return sizes;
}

HexagonSpec hexagon_tree(int r) {
  if (r < 3) throw Error(ErrorKind::kRadiusTooSmall, "hexagon radius must be >= 3, got " + std::to_string(r));
  HexagonSpec h;
  h.radius = r;
  h.layout = ball({0, 0}, r);
  const int n = static_cast<int>(h.layout.size());
  std::vector<Edge> edges;
  std::vector<int> child_count(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= r; ++k) {
    for (int side = 0; side < 6; ++side) {
      for (int t = 0; t < k; ++t) {
        NodeId parent = 0;
        if (k == 1) {
          parent = 0;
        } else if (t == 0) {
          parent = ring_node(k - 1, side, 0);
        } else if (k == 2) {
          parent = red_side(side) ? ring_node(1, side + 1, 0) : ring_node(1, side, 0);
        } else if (t == 1 && !red_side(side)) {
          parent = ring_node(k - 1, side, 0);
        } else if (t == k - 1 && !red_side(side + 1)) {
          parent = ring_node(k - 1, side + 1, 0);
        } else if (t == 1) {
          parent = ring_node(k - 1, side, 1);
        } else if (t == k - 1) {
          parent = ring_node(k - 1, side, k - 2);
        } else {
          parent = ring_node(k - 1, side, t - 1);
        }
        const NodeId child = ring_node(k, side, t);
        edges.emplace_back(parent, child);
        ++child_count[static_cast<std::size_t>(parent)];
      }
    }
  }
  h.tree = Tree::from_edges(n, std::move(edges));
  for (int k = r; k >= 1; --k) h.red_path.push_back(ring_node(k, 3, 0));
  h.red_path.push_back(0);
  for (int k = 1; k <= r; ++k) h.red_path.push_back(ring_node(k, 0, 0));
  for (NodeId v = 0; v < n; ++v) {
    if (child_count[static_cast<std::size_t>(v)] == 3) h.green.push_back(v);
  }
  for (int side = 0; side < 6; ++side) h.corners[static_cast<std::size_t>(side)] = ring_node(r, side, 0);
  return h;
}

NodeId GadgetGraph::anchor(const std::string& name) const {
  auto it = anchors.find(name);
  if (it == anchors.end()) throw Error(ErrorKind::kBadAnchor, "no anchor named '" + name + "'");
  return it->second;
}

bool GadgetGraph::is_red(NodeId v) const { return std::find(red.begin(), red.end(), v) != red.end(); }

Isometry hexagon_pose(Cell center, int dir, bool mirror) {
  return Isometry{((dir % 6) + 6) % 6, mirror, center};
}

int GadgetBuilder::new_instance(std::string kind) {
  kinds_.push_back(std::move(kind));
  return static_cast<int>(kinds_.size()) - 1;
}

NodeId GadgetBuilder::add_node(Cell c, int instance) {
  layout_.push_back(c);
  provenance_.push_back(instance);
  return static_cast<NodeId>(layout_.size()) - 1;
}

void GadgetBuilder::add_edge(NodeId a, NodeId b) { edges_.emplace_back(a, b); }

std::vector<NodeId> GadgetBuilder::add_hexagon(const HexagonSpec& h, const Isometry& pose, int instance,
                                               std::optional<std::pair<NodeId, NodeId>> join) {
  const int n = h.tree.node_count();
  std::vector<NodeId> map(static_cast<std::size_t>(n), -1);
  for (NodeId v = 0; v < n; ++v) {
    const Cell c = pose.apply(h.layout[static_cast<std::size_t>(v)]);
    if (join && join->first == v) {
      map[static_cast<std::size_t>(v)] = join->second;
      if (cell(join->second) != c) {
        conflicts_.push_back("instance " + std::to_string(instance) + " joins node " + std::to_string(join->second) +
                             " at a different cell");
      }
    } else {
      map[static_cast<std::size_t>(v)] = add_node(c, instance);
    }
  }
  for (const auto& [a, b] : h.tree.edges()) add_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
  return map;
}

std::vector<NodeId> GadgetBuilder::add_path(NodeId from, Cell dir, int edges, int instance) {
  std::vector<NodeId> out;
  NodeId prev = from;
  for (int i = 0; i < edges; ++i) {
    const NodeId v = add_node(cell(prev) + dir, instance);
    add_edge(prev, v);
    out.push_back(v);
    prev = v;
  }
  return out;
}

Tree GadgetBuilder::tree() const { return Tree::from_edges(node_count(), edges_); }

GadgetGraph hexagon_gadget(int r) {
  const HexagonSpec h = hexagon_tree(r);
  GadgetGraph g;
  g.tree = h.tree;
  g.layout = h.layout;
  g.anchors = {{"end-a", h.end_a()}, {"end-b", h.end_b()}};
  g.red = {h.end_a(), h.end_b()};
  g.provenance.assign(static_cast<std::size_t>(h.tree.node_count()), 0);
  g.instance_kinds = {"hexagon-r" + std::to_string(r)};
  return g;
}

GadgetGraph chain(const GadgetGraph& a, NodeId endpoint_a, const GadgetGraph& b, NodeId endpoint_b) {
  auto check = [](const GadgetGraph& g, NodeId v, const char* which) {
    if (v < 0 || v >= g.tree.node_count() || !g.is_red(v) || g.tree.degree(v) != 1) {
      throw Error(ErrorKind::kBadAnchor, std::string(which) + " endpoint " + std::to_string(v) + " is not a marked red leaf");
    }
  };
  check(a, endpoint_a, "first");
  check(b, endpoint_b, "second");

  const int na = a.tree.node_count();
  const int nb = b.tree.node_count();
  std::vector<NodeId> map_b(static_cast<std::size_t>(nb), -1);
  NodeId next = na;
  for (NodeId v = 0; v < nb; ++v) map_b[static_cast<std::size_t>(v)] = (v == endpoint_b) ? endpoint_a : next++;

  GadgetGraph out;
  auto edges = a.tree.edges();
  for (const auto& [u, v] : b.tree.edges()) edges.emplace_back(map_b[static_cast<std::size_t>(u)], map_b[static_cast<std::size_t>(v)]);
  out.tree = Tree::from_edges(na + nb - 1, std::move(edges));

  // Orient b: first isometry (in point_group order) that avoids collisions.
  const Cell target = a.layout[static_cast<std::size_t>(endpoint_a)];
  const Cell source = b.layout[static_cast<std::size_t>(endpoint_b)];
  bool placed = false;
  for (const Isometry& g0 : point_group()) {
    Isometry g = g0;
    g.translation = target - g0.apply_linear(source);
    std::vector<Cell> layout = a.layout;
    layout.resize(static_cast<std::size_t>(na + nb - 1));
    for (NodeId v = 0; v < nb; ++v) {
      if (v != endpoint_b) layout[static_cast<std::size_t>(map_b[static_cast<std::size_t>(v)])] = g.apply(b.layout[static_cast<std::size_t>(v)]);
    }
    if (validate(out.tree, Placement(layout)).empty()) {
      out.layout = std::move(layout);
      placed = true;
      break;
    }
  }
  if (!placed) throw Error(ErrorKind::kBadAnchor, "no collision-free orientation for the chained gadget");

  for (const auto& [name, v] : a.anchors) {
    if (v != endpoint_a) out.anchors[name] = v;
  }
  for (const auto& [name, v] : b.anchors) {
    if (v == endpoint_b) continue;
    const std::string key = out.anchors.count(name) ? "b." + name : name;
    out.anchors[key] = map_b[static_cast<std::size_t>(v)];
  }
  out.red = a.red;
  for (NodeId v : b.red) {
    const NodeId m = map_b[static_cast<std::size_t>(v)];
    if (!out.is_red(m)) out.red.push_back(m);
  }
  out.instance_kinds = a.instance_kinds;
  out.instance_kinds.insert(out.instance_kinds.end(), b.instance_kinds.begin(), b.instance_kinds.end());
  out.provenance = a.provenance;
  out.provenance.resize(static_cast<std::size_t>(na + nb - 1));
  const int offset = static_cast<int>(a.instance_kinds.size());
  for (NodeId v = 0; v < nb; ++v) {
    if (v != endpoint_b) {
      out.provenance[static_cast<std::size_t>(map_b[static_cast<std::size_t>(v)])] = b.provenance[static_cast<std::size_t>(v)] + offset;
    }
  }
  return out;
}

GadgetBuilder::Branching GadgetBuilder::add_branching(const HexagonSpec& h, int trunk_length, const Isometry& pose,
                                                      std::optional<NodeId> join_trunk_in,
                                                      const std::vector<NodeId>* shared_h0) {
  const int r = h.radius;
  const auto place = [&](Cell center, int dir, int instance, std::optional<std::pair<NodeId, NodeId>> join) {
    return add_hexagon(h, pose.compose(hexagon_pose(center, dir)), instance, join);
  };
  const auto at = [](const std::vector<NodeId>& m, NodeId v) { return m[static_cast<std::size_t>(v)]; };
  const std::string kind = "hexagon-r" + std::to_string(r);

  std::optional<std::pair<NodeId, NodeId>> join;
  if (join_trunk_in) join = std::pair{h.end_a(), *join_trunk_in};
  std::vector<NodeId> h0;
  if (shared_h0) {
    h0 = *shared_h0;
    // A mirrored pose keeps the red axis, so only the red corners must agree.
    for (NodeId v : {h.end_a(), h.end_b()}) {
      if (cell(at(h0, v)) != pose.apply(h.layout[static_cast<std::size_t>(v)])) {
        conflicts_.push_back("shared hexagon does not lie on the trunk of the branching");
      }
    }
  } else {
    h0 = place({0, 0}, 0, new_instance(kind), join);
  }
  Branching out;
  out.trunk_in = at(h0, h.end_a());
  out.junction = at(h0, h.end_b());
  const Cell j = direction(0) * r;

  const auto ha = place(j + direction(1) * (r + 1), 1, new_instance(kind), std::nullopt);
  add_edge(out.junction, at(ha, h.end_a()));
  const auto hb = place(j + direction(5) * (r + 1), 5, new_instance(kind), std::nullopt);
  add_edge(out.junction, at(hb, h.end_a()));

  NodeId last = out.junction;
  if (trunk_length > 0) {
    last = add_path(out.junction, pose.apply_linear(direction(0)), trunk_length, new_instance("path")).back();
  }
  const auto h3 = place(j + direction(0) * (trunk_length + 1 + r), 0, new_instance(kind), std::nullopt);
  add_edge(last, at(h3, h.end_a()));

  out.trunk_out = at(h3, h.end_b());
  out.branch_a = at(ha, h.end_b());
  out.branch_b = at(hb, h.end_b());
  out.ha = ha;
  out.hb = hb;
  out.h3 = h3;
  out.red = {out.trunk_in, out.junction};
  for (const auto* hx : {&ha, &hb, &h3}) {
    out.red.push_back(at(*hx, h.end_a()));
    out.red.push_back(at(*hx, h.end_b()));
  }
  std::sort(out.red.begin(), out.red.end());
  return out;
}

GadgetGraph branching_gadget(const BranchingParams& params) {
  if (params.trunk_length < 0) throw Error(ErrorKind::kParamsInfeasible, "trunk length must be >= 0");
  const HexagonSpec h = hexagon_tree(params.radius);
  GadgetBuilder b;
  const auto nodes = b.add_branching(h, params.trunk_length, Isometry::identity());

  GadgetGraph g;
  g.tree = b.tree();
  g.layout = b.layout();
  g.provenance = b.provenance();
  g.instance_kinds = b.instance_kinds();
  g.anchors = {{"trunk-in", nodes.trunk_in},
               {"trunk-out", nodes.trunk_out},
               {"branch-A", nodes.branch_a},
               {"branch-B", nodes.branch_b}};
  g.red = nodes.red;
  if (!b.join_conflicts().empty() || !validate(g.tree, Placement(g.layout)).empty()) {
    throw Error(ErrorKind::kParamsInfeasible,
                "trunk length " + std::to_string(params.trunk_length) + " makes the hexagons collide");
  }
  return g;
}

}  // namespace wudcr
