#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wudcr/graph.hpp"
#include "wudcr/placement.hpp"

namespace wudcr {

enum class Mode { kPaperPrefix, kWindow };

std::string to_string(Mode mode);
/// Accepts "paper-prefix" and "window"; throws Error(kParse) otherwise.
Mode parse_mode(std::string_view text);

struct Verdict {
  bool realizable = false;
  Mode mode = Mode::kWindow;
  /// 1-based internal-node window [p, q] that violates the bound. In
  /// paper-prefix mode p is always 1 and q is the failing prefix length.
  std::optional<std::pair<int, int>> failing_window;
  std::optional<Placement> witness;
};

/// Prefix sums d_1 + ... + d_l <= 4l + 2 on the given orientation.
Verdict prefix_check(const Spine& s);

/// Every window sum d_p + ... + d_q <= 4(q - p + 1) + 2. Reports the window of
/// maximal excess (earliest on ties) when violated.
Verdict window_check(const Spine& s);

/// Max degree >= 7 is rejected outright. Other trees must be caterpillars
/// (Error(kNotACaterpillar) otherwise); max degree <= 4 is accepted and the
/// rest goes through the selected check. A witness is attached on request
/// when one can be built.
Verdict decide(const Tree& t, Mode mode = Mode::kWindow, bool want_witness = false);

/// Straight spine along direction 0. Leaves of v_i take the free cells it
/// shares with v_{i-1} first (upper before lower), then those shared with
/// v_{i+1}. On a dead end trees with at most 64 nodes fall back to
/// embed_search; otherwise, or when the search finds nothing within
/// kRealizeFallbackBudget expansions, throws
/// Error(kConstructionFailed).
Placement realize_caterpillar(const Tree& t, const Spine& s);
Placement realize_caterpillar(const Tree& t);

inline constexpr int kRealizeFallbackNodes = 64;
/// Node expansions allowed to the fallback search before giving up.
inline constexpr std::uint64_t kRealizeFallbackBudget = 20'000'000;

}  // namespace wudcr
