#include "wudcr/recognizer.hpp"

#include <algorithm>

#include "wudcr/error.hpp"

namespace wudcr {

std::string to_string(Mode mode) { return mode == Mode::kPaperPrefix ? "paper-prefix" : "window"; }

Mode parse_mode(std::string_view text) {
  if (text == "paper-prefix") return Mode::kPaperPrefix;
  if (text == "window") return Mode::kWindow;
  throw Error(ErrorKind::kParse, "unknown mode '" + std::string(text) + "'");
}

Verdict prefix_check(const Spine& s) {
  Verdict v;
  v.mode = Mode::kPaperPrefix;
  v.realizable = true;
  long long sum = 0;
  for (int l = 1; l <= s.k(); ++l) {
    sum += s.internal_degrees[static_cast<std::size_t>(l - 1)];
    if (sum > 4LL * l + 2) {
      v.realizable = false;
      v.failing_window = std::make_pair(1, l);
      break;
    }
  }
  return v;
}

Verdict window_check(const Spine& s) {
  // Kadane on d_i - 4: a window violates the bound iff its excess exceeds 2.
  Verdict v;
  v.mode = Mode::kWindow;
  long long best = 0;
  int best_p = 0, best_q = 0;
  long long run = 0;
  int run_p = 1;
  bool have = false;
  for (int i = 1; i <= s.k(); ++i) {
    const long long x = s.internal_degrees[static_cast<std::size_t>(i - 1)] - 4;
    if (i == 1 || run <= 0) {
      run = x;
      run_p = i;
    } else {
      run += x;
    }
    if (!have || run > best) {
      best = run;
      best_p = run_p;
      best_q = i;
      have = true;
    }
  }
  v.realizable = !have || best <= 2;
  if (!v.realizable) v.failing_window = std::make_pair(best_p, best_q);
  return v;
}

namespace {

Placement realize_on_line(const Tree& t, const Spine& s) {
  Placement p(t.node_count());
  const int len = static_cast<int>(s.path.size());
  std::vector<char> on_path(static_cast<std::size_t>(t.node_count()), 0);
  for (int i = 0; i < len; ++i) {
    p.set(s.path[static_cast<std::size_t>(i)], Cell{i, 0});
    on_path[static_cast<std::size_t>(s.path[static_cast<std::size_t>(i)])] = 1;
  }
  if (len == 2) return p;

  std::vector<char> used_prev_upper(static_cast<std::size_t>(len), 0);
  std::vector<char> used_prev_lower(static_cast<std::size_t>(len), 0);
  // The cells shared by v_{i-1} and v_i are (i-1, 1) and (i, -1). The cells
  // v_i shares with v_{i+1} expire first, so they are filled before the next ones.
  auto take = [&](int gap, bool upper) -> bool {
    auto& used = upper ? used_prev_upper : used_prev_lower;
    if (gap < 1 || gap >= len || used[static_cast<std::size_t>(gap)]) return false;
    used[static_cast<std::size_t>(gap)] = 1;
    return true;
  };
  for (int i = 1; i + 1 < len; ++i) {
    const NodeId v = s.path[static_cast<std::size_t>(i)];
    std::vector<NodeId> leaves;
    for (NodeId w : t.neighbors(v)) {
      if (!on_path[static_cast<std::size_t>(w)]) leaves.push_back(w);
    }
    std::sort(leaves.begin(), leaves.end());
    std::size_t next = 0;
    const std::pair<int, bool> slots[4] = {{i, true}, {i, false}, {i + 1, true}, {i + 1, false}};
    for (const auto& [gap, upper] : slots) {
      if (next == leaves.size()) break;
      if (!take(gap, upper)) continue;
      p.set(leaves[next++], upper ? Cell{gap - 1, 1} : Cell{gap, -1});
    }
    if (next != leaves.size()) {
      throw Error(ErrorKind::kConstructionFailed,
                  "no free cell left for a leaf of spine node " + std::to_string(v));
    }
  }
  return p;
}

}  // namespace

Placement realize_caterpillar(const Tree& t, const Spine& s) {
  try {
    Placement p = realize_on_line(t, s);
    if (!validate(t, p).empty()) throw Error(ErrorKind::kConstructionFailed, "greedy layout failed validation");
    return p;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kConstructionFailed || t.node_count() > kRealizeFallbackNodes) throw;
    SearchOptions opt;
    opt.budget = kRealizeFallbackBudget;
    try {
      if (auto found = find_placement(t, opt)) return *found;
    } catch (const Error& inner) {
      if (inner.kind() != ErrorKind::kTimeout) throw;
    }
    throw;
  }
}

Placement realize_caterpillar(const Tree& t) {
  if (t.node_count() == 1) {
    Placement p(1);
    p.set(0, Cell{0, 0});
    return p;
  }
  return realize_caterpillar(t, caterpillar_decompose(t));
}

Verdict decide(const Tree& t, Mode mode, bool want_witness) {
  Verdict v;
  v.mode = mode;
  if (t.node_count() == 1) {
    v.realizable = true;
    if (want_witness) v.witness = realize_caterpillar(t);
    return v;
  }
  const int delta = max_degree(t);
  if (delta >= 7) return v;
  const Spine s = caterpillar_decompose(t);
  if (delta <= 4) {
    v.realizable = true;
  } else {
    v = mode == Mode::kPaperPrefix ? prefix_check(s) : window_check(s);
  }
  if (v.realizable && want_witness) {
    try {
      v.witness = realize_caterpillar(t, s);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kConstructionFailed) throw;
    }
  }
  return v;
}

}  // namespace wudcr
