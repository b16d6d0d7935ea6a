#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wudcr/graph.hpp"
#include "wudcr/placement.hpp"

namespace wudcr {

enum class NodeRole { kPlain, kSpine, kGreen, kFlag };

std::string to_string(NodeRole role);

struct RenderStyle {
  double scale = 10.0;
  std::map<NodeRole, std::string> fill = {
      {NodeRole::kPlain, "#ffffff"},
      {NodeRole::kSpine, "#d62728"},
      {NodeRole::kGreen, "#2ca02c"},
      {NodeRole::kFlag, "#1f77b4"},
  };
  std::string stroke = "#000000";
  double stroke_width = 0.5;
  bool legend = false;
};

/// SVG 1.1 document with one circle per node in ascending id order. Circle
/// centers are to_euclidean(cell) * scale and radii equal scale; coordinates
/// carry six decimals. `roles` (one per node) defaults to kPlain.
/// Throws Error(kInvalidPlacement) when the placement fails validation or the
/// style is unusable.
std::string render_svg(const Tree& t, const Placement& p, const RenderStyle& style = {},
                       const std::optional<std::vector<NodeRole>>& roles = std::nullopt);

}  // namespace wudcr
