#include "wudcr/logicengine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "wudcr/error.hpp"
#include "wudcr/gadgets.hpp"

namespace wudcr {

CnfFormula CnfFormula::make(int n, const std::vector<std::vector<int>>& clauses) {
  if (n < 0) throw Error(ErrorKind::kParse, "variable count must be >= 0");
  CnfFormula f;
  f.n = n;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    std::set<Literal> lits;
    for (int lit : clauses[j]) {
      if (lit == 0 || lit > n || lit < -n) {
        throw Error(ErrorKind::kParse, "literal " + std::to_string(lit) + " out of range in clause " + std::to_string(j + 1));
      }
      lits.insert(Literal{std::abs(lit), lit > 0});
    }
    if (lits.empty()) throw Error(ErrorKind::kParse, "clause " + std::to_string(j + 1) + " is empty");
    if (lits.size() > 3) {
      throw Error(ErrorKind::kClauseTooWide, "clause " + std::to_string(j + 1) + " has " + std::to_string(lits.size()) +
                                                 " distinct literals");
    }
    for (const Literal& l : lits) {
      if (lits.count(Literal{l.variable, !l.positive})) {
        throw Error(ErrorKind::kParse, "clause " + std::to_string(j + 1) + " contains x" + std::to_string(l.variable) +
                                           " and its negation");
      }
    }
    f.clauses.emplace_back(lits.begin(), lits.end());
  }
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int m = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (n >= 0 || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad problem line");
      }
      continue;
    }
    if (n < 0) throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": clause before problem line");
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (n < 0) throw Error(ErrorKind::kParse, "missing problem line");
  if (!current.empty()) throw Error(ErrorKind::kParse, "last clause is not terminated by 0");
  if (static_cast<int>(clauses.size()) != m) {
    throw Error(ErrorKind::kParse,
                "problem line announces " + std::to_string(m) + " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfFormula::make(n, clauses);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.m() << '\n';
  for (const auto& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? l.variable : -l.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool nae_satisfied(const CnfFormula& f, const std::vector<bool>& values) {
  for (const auto& c : f.clauses) {
    bool any_true = false;
    bool any_false = false;
    for (const Literal& l : c) {
      const bool v = values.at(static_cast<std::size_t>(l.variable - 1)) == l.positive;
      any_true = any_true || v;
      any_false = any_false || !v;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

namespace {

std::vector<bool> assignment_from_index(int n, std::uint64_t index) {
  std::vector<bool> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1U;
  return values;
}

}  // namespace

std::optional<std::vector<bool>> nae_solve_bruteforce(const CnfFormula& f) {
  if (f.n > 24) throw Error(ErrorKind::kTooManyVariables, "brute force supports n <= 24, got " + std::to_string(f.n));
  const std::uint64_t total = std::uint64_t{1} << f.n;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto values = assignment_from_index(f.n, idx);
    if (nae_satisfied(f, values)) return values;
  }
  return std::nullopt;
}

bool part_flagged(const CnfFormula& f, int variable, int level, Part part) {
  const auto& clause = f.clauses.at(static_cast<std::size_t>(level - 1));
  const bool plain = std::count(clause.begin(), clause.end(), Literal{variable, true}) > 0;
  const bool negated = std::count(clause.begin(), clause.end(), Literal{variable, false}) > 0;
  if (!plain && !negated) return true;
  return part == Part::kPositive ? negated : plain;
}

Side side_of(Part part, bool value) { return (part == Part::kPositive) == value ? Side::kTop : Side::kBottom; }

namespace {

constexpr int kRadius = 3;

// Decides whether the flag gadget at (pole, part, level) is mirrored so that
// its extended branch points into the right-hand gap.
using MirrorFn = std::function<bool(int pole, Part part, int level)>;

struct Assembly {
  GadgetBuilder builder;
  std::vector<EngineAnchor> anchors;
};

class Assembler {
 public:
  Assembler(const CnfFormula& f, const EngineGeometry& geo, const std::vector<bool>& values, MirrorFn mirror)
      : f_(f), geo_(geo), values_(values), mirror_(std::move(mirror)), hex_(hexagon_tree(kRadius)),
        cap_(hexagon_tree(geo.cap_radius)) {}

  Assembly run() {
    const int n = f_.n;
    const auto cap = out_.builder.add_hexagon(cap_, hexagon_pose({-cap_.radius, 0}, 0), out_.builder.new_instance("cap"));
    NodeId prev = at(cap, cap_.end_b());
    out_.anchors.push_back({"cap", -1, 0, std::nullopt, at(cap, 0)});
    int pos = 0;
    for (int pole = 0; pole <= n + 1; ++pole) {
      const bool frame = pole == 0 || pole == n + 1;
      if (pole > 0) {
        const bool outer = pole == 1 || pole == n + 1;
        prev = chain(prev, pos, outer ? geo_.frame_gap_hexagons : geo_.spine_hexagons, Isometry::identity());
      }
      const bool value = frame || values_.at(static_cast<std::size_t>(pole - 1));
      const auto spine = out_.builder.add_branching(hex_, kFrozenTrunkLength,
                                                    Isometry{0, !value, {pos + kRadius, 0}}, prev);
      out_.anchors.push_back({"spine-branching", pole, 0, std::nullopt, spine.junction});
      const Cell junction{pos + 2 * kRadius, 0};
      const Isometry top{1, false, junction};
      const Isometry bottom{5, true, junction};
      if (frame) {
        // The wall covers the flags of the adjacent pole up to its last level.
        const int walls = wall_hexagons(pole == 0 ? 1 : n);
        for (const auto& [part, start] : {std::pair{Part::kPositive, spine.branch_a}, {Part::kNegative, spine.branch_b}}) {
          out_.anchors.push_back({"pole-part", pole, 0, part, start});
          int wall_pos = 2 * kRadius + 1;
          chain(start, wall_pos, walls, part == Part::kPositive ? top : bottom);
        }
      } else {
        const int stagger = geo_.stagger_hexagons * (n - pole);
        build_part(pole, Part::kPositive, value ? top : bottom, spine.branch_a, spine.ha, stagger);
        build_part(pole, Part::kNegative, value ? bottom : top, spine.branch_b, spine.hb, stagger);
      }
      prev = spine.trunk_out;
      pos += gadget_span();
    }
    const auto right = out_.builder.add_hexagon(cap_, hexagon_pose({pos + cap_.radius, 0}, 0),
                                                out_.builder.new_instance("cap"), std::pair{cap_.end_a(), prev});
    out_.anchors.push_back({"cap", -1, 0, std::nullopt, at(right, 0)});
    return std::move(out_);
  }

 private:
  static NodeId at(const std::vector<NodeId>& m, NodeId v) { return m[static_cast<std::size_t>(v)]; }
  static int gadget_span() { return 4 * kRadius + kFrozenTrunkLength + 1; }

  // Along-pole offset of the last trunk corner of a variable pole part.
  int part_end(int pole) const {
    int end = 2 * kRadius + 1 + 2 * kRadius * geo_.stagger_hexagons * (f_.n - pole);
    if (f_.m() > 0) end += f_.m() * (gadget_span() - 2 * kRadius) + (f_.m() - 1) * 2 * kRadius * geo_.level_hexagons;
    return end;
  }

  // A flag ends kRadius beyond its last hexagon center; the wall covers the
  // neighbour's last flag with one radius to spare.
  int wall_hexagons(int neighbour) const {
    if (f_.m() == 0) return 0;
    const int junction = part_end(neighbour) - gadget_span() + 2 * kRadius;
    const int reach = junction + 3 * kRadius + 1 + 2 * kRadius * geo_.flag_hexagons;
    const int step = 2 * kRadius;
    return std::max(0, (reach - (2 * kRadius + 1) + step - 1) / step);
  }

  // Chains `count` hexagons along local direction 0 starting at `prev`,
  // which sits at local offset `pos`.
  NodeId chain(NodeId prev, int& pos, int count, const Isometry& frame) {
    for (int t = 0; t < count; ++t) {
      last_hexagon_ = out_.builder.add_hexagon(hex_, frame.compose(hexagon_pose({pos + kRadius, 0}, 0)),
                                               out_.builder.new_instance("hexagon-r3"), std::pair{hex_.end_a(), prev});
      prev = at(last_hexagon_, hex_.end_b());
      pos += 2 * kRadius;
    }
    return prev;
  }

  // Extends a branch ending at `prev` (local cell `start`) by flag hexagons
  // along `dir`.
  void extend(NodeId prev, Cell start, int dir, const Isometry& frame) {
    for (int t = 0; t < geo_.flag_hexagons; ++t) {
      const Cell center = start + direction(dir) * (kRadius + 2 * kRadius * t);
      const auto hx = out_.builder.add_hexagon(hex_, frame.compose(hexagon_pose(center, dir)),
                                               out_.builder.new_instance("flag-r3"), std::pair{hex_.end_a(), prev});
      prev = at(hx, hex_.end_b());
    }
  }

  // Each flag branching reuses the hexagon ending at the previous trunk
  // corner as its H0, so consecutive levels are 2r + tl + 1 apart.
  void build_part(int pole, Part part, const Isometry& pose, NodeId start, const std::vector<NodeId>& branch_hexagon,
                  int stagger) {
    out_.anchors.push_back({"pole-part", pole, 0, part, start});
    int pos = 2 * kRadius + 1;
    last_hexagon_ = branch_hexagon;
    NodeId prev = chain(start, pos, stagger, pose);
    for (int level = 1; level <= f_.m(); ++level) {
      if (level > 1) prev = chain(prev, pos, geo_.level_hexagons, pose);
      const bool flagged = part_flagged(f_, pole, level, part);
      const bool mirrored = flagged && mirror_(pole, part, level);
      pos -= 2 * kRadius;
      const Isometry gadget = pose.compose(Isometry{0, mirrored, {pos + kRadius, 0}});
      const auto b = out_.builder.add_branching(hex_, kFrozenTrunkLength, gadget, std::nullopt, &last_hexagon_);
      out_.anchors.push_back({"flag-branching", pole, level, part, b.junction});
      if (flagged) extend(b.branch_a, Cell{kRadius, 0} + direction(1) * (2 * kRadius + 1), 1, gadget);
      prev = b.trunk_out;
      last_hexagon_ = b.h3;
      pos += gadget_span();
    }
  }

  const CnfFormula& f_;
  const EngineGeometry& geo_;
  const std::vector<bool>& values_;
  MirrorFn mirror_;
  HexagonSpec hex_;
  HexagonSpec cap_;
  Assembly out_;
  std::vector<NodeId> last_hexagon_;
};

}  // namespace

EngineTree build_engine_tree(const CnfFormula& f, const EngineGeometry& geometry) {
  if (f.n < 1) throw Error(ErrorKind::kParse, "the engine needs at least one variable");
  const std::vector<bool> values(static_cast<std::size_t>(f.n), true);
  Assembly a = Assembler(f, geometry, values, [](int, Part, int) { return false; }).run();
  EngineTree e;
  e.formula = f;
  e.geometry = geometry;
  e.tree = a.builder.tree();
  e.anchors = std::move(a.anchors);
  e.provenance = a.builder.provenance();
  e.instance_kinds = a.builder.instance_kinds();
  return e;
}

std::optional<EngineConfig> assign_flags(const CnfFormula& f, const std::vector<bool>& flips) {
  if (static_cast<int>(flips.size()) != f.n) {
    throw Error(ErrorKind::kParse, "expected " + std::to_string(f.n) + " flips, got " + std::to_string(flips.size()));
  }
  EngineConfig cfg;
  cfg.flips = flips;
  const int n = f.n;
  for (int level = 1; level <= f.m(); ++level) {
    for (Side side : {Side::kTop, Side::kBottom}) {
      std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
      for (int pole = 1; pole <= n; ++pole) {
        const bool value = flips[static_cast<std::size_t>(pole - 1)];
        const Part part = side_of(Part::kPositive, value) == side ? Part::kPositive : Part::kNegative;
        if (!part_flagged(f, pole, level, part)) continue;
        int gap = -1;
        if (pole - 1 >= 1 && !used[static_cast<std::size_t>(pole - 1)]) {
          gap = pole - 1;
        } else if (pole <= n - 1 && !used[static_cast<std::size_t>(pole)]) {
          gap = pole;
        }
        if (gap < 0) return std::nullopt;
        used[static_cast<std::size_t>(gap)] = 1;
        cfg.flag_gap[FlagSlot{pole, level, side}] = gap;
      }
    }
  }
  return cfg;
}

Placement synthesize_layout(const EngineTree& e, const EngineConfig& cfg) {
  const CnfFormula& f = e.formula;
  if (static_cast<int>(cfg.flips.size()) != f.n) {
    throw Error(ErrorKind::kLayoutBug, "config has " + std::to_string(cfg.flips.size()) + " flips for " +
                                           std::to_string(f.n) + " variables");
  }
  const auto mirror = [&](int pole, Part part, int level) {
    const Side side = side_of(part, cfg.flips[static_cast<std::size_t>(pole - 1)]);
    const auto it = cfg.flag_gap.find(FlagSlot{pole, level, side});
    if (it == cfg.flag_gap.end()) {
      throw Error(ErrorKind::kLayoutBug, "no gap for the flag of pole " + std::to_string(pole) + " at level " +
                                             std::to_string(level));
    }
    if (it->second == pole) return true;
    if (it->second == pole - 1) return false;
    throw Error(ErrorKind::kLayoutBug, "gap " + std::to_string(it->second) + " is not adjacent to pole " +
                                           std::to_string(pole));
  };
  Assembly a = Assembler(f, e.geometry, cfg.flips, mirror).run();
  if (a.builder.node_count() != e.tree.node_count() || !a.builder.join_conflicts().empty()) {
    throw Error(ErrorKind::kLayoutBug, "replayed assembly does not match the engine tree");
  }
  Placement p(a.builder.layout());
  const auto violations = validate(e.tree, p);
  if (!violations.empty()) {
    std::string msg = std::to_string(violations.size()) + " violation(s); first: " + violations.front().describe();
    throw Error(ErrorKind::kLayoutBug, msg);
  }
  return p;
}

EngineDecision decide_engine(const CnfFormula& f, int jobs, const EngineGeometry& geometry) {
  if (f.n > 16) throw Error(ErrorKind::kTooManyVariables, "engine search supports n <= 16, got " + std::to_string(f.n));
  const std::uint64_t total = std::uint64_t{1} << f.n;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  const auto scan = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t idx = first; idx < total && idx < best.load(); idx += stride) {
      if (assign_flags(f, assignment_from_index(f.n, idx))) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  if (workers == 1) {
    scan(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(scan, w, workers);
    for (auto& t : pool) t.join();
  }
  EngineDecision d;
  if (best.load() == std::numeric_limits<std::uint64_t>::max()) return d;
  d.realizable = true;
  d.flips = assignment_from_index(f.n, best.load());
  const auto cfg = assign_flags(f, *d.flips);
  d.placement = synthesize_layout(build_engine_tree(f, geometry), *cfg);
  return d;
}

}  // namespace wudcr
