#include "wudcr/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "wudcr/error.hpp"

namespace wudcr {

std::string to_string(NodeRole role) {
  switch (role) {
    case NodeRole::kPlain: return "plain";
    case NodeRole::kSpine: return "spine";
    case NodeRole::kGreen: return "green";
    case NodeRole::kFlag: return "flag";
  }
  return "plain";
}

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_svg(const Tree& t, const Placement& p, const RenderStyle& style,
                       const std::optional<std::vector<NodeRole>>& roles) {
  if (!(style.scale > 0.0)) throw Error(ErrorKind::kInvalidPlacement, "render scale must be positive");
  for (NodeRole r : {NodeRole::kPlain, NodeRole::kSpine, NodeRole::kGreen, NodeRole::kFlag}) {
    if (!style.fill.contains(r)) throw Error(ErrorKind::kInvalidPlacement, "no fill for role " + to_string(r));
  }
  if (p.size() != t.node_count() || !p.complete()) {
    throw Error(ErrorKind::kInvalidPlacement, "placement does not assign every node");
  }
  if (roles && static_cast<int>(roles->size()) != t.node_count()) {
    throw Error(ErrorKind::kInvalidPlacement, "role list length differs from node count");
  }
  const auto violations = validate(t, p);
  if (!violations.empty()) throw Error(ErrorKind::kInvalidPlacement, violations.front().describe());

  std::vector<Point> pts;
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    Point e = to_euclidean(p.at(v));
    e.x *= style.scale;
    e.y *= -style.scale;  // SVG y grows downward
    pts.push_back(e);
    min_x = std::min(min_x, e.x);
    max_x = std::max(max_x, e.x);
    min_y = std::min(min_y, e.y);
    max_y = std::max(max_y, e.y);
  }
  const double pad = style.scale + style.stroke_width;
  const double legend_h = style.legend ? 5.0 * style.scale : 0.0;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed6(min_x - pad) + " " +
         fixed6(min_y - pad) + " " + fixed6(max_x - min_x + 2 * pad) + " " +
         fixed6(max_y - min_y + 2 * pad + legend_h) + "\">\n";
  out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + fixed6(style.stroke_width) + "\">\n";
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const NodeRole role = roles ? (*roles)[static_cast<std::size_t>(v)] : NodeRole::kPlain;
    const Point& e = pts[static_cast<std::size_t>(v)];
    out += "<circle id=\"n" + std::to_string(v) + "\" class=\"" + to_string(role) + "\" cx=\"" + fixed6(e.x) +
           "\" cy=\"" + fixed6(e.y) + "\" r=\"" + fixed6(style.scale) + "\" fill=\"" + style.fill.at(role) +
           "\"/>\n";
  }
  out += "</g>\n";
  if (style.legend) {
    double x = min_x - pad + style.scale;
    const double y = max_y + pad + 2.5 * style.scale;
    out += "<g font-family=\"sans-serif\" font-size=\"" + fixed6(style.scale) + "\">\n";
    for (NodeRole r : {NodeRole::kPlain, NodeRole::kSpine, NodeRole::kGreen, NodeRole::kFlag}) {
      out += "<circle cx=\"" + fixed6(x) + "\" cy=\"" + fixed6(y) + "\" r=\"" + fixed6(style.scale / 2) +
             "\" fill=\"" + style.fill.at(r) + "\" stroke=\"" + style.stroke + "\"/>\n";
      out += "<text x=\"" + fixed6(x + style.scale) + "\" y=\"" + fixed6(y + style.scale / 3) + "\">" +
             to_string(r) + "</text>\n";
      x += 7.0 * style.scale;
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace wudcr
