// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "wudcr/error.hpp"
#include "wudcr/gadgets.hpp"
#include "wudcr/graph.hpp"
#include "wudcr/logicengine.hpp"
#include "wudcr/placement.hpp"
#include "wudcr/recognizer.hpp"

using namespace wudcr;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kSmallDecideBudgetMs = 10.0;
constexpr int kRandomLowDegree = 1000;
constexpr double kLinearLargeBudgetS = 1.0;
constexpr double kLinearRatioLo = 10.0 * 0.7;
constexpr double kLinearRatioHi = 10.0 * 1.3;
constexpr std::size_t kCacheEvictBytes = std::size_t{256} << 20;
constexpr double kBruteForceBudgetS = 300.0;
constexpr double kHexagonBudgetS = 60.0;
constexpr double kReductionBudgetS = 600.0;
constexpr double kSizeFitTolerance = 0.10;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
double time_s(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " AC" << id << " " << title << " | " << detail << std::endl;
  if (!ok) ++failures;
}

std::string fmt(double x, int prec = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(prec);
  s << x;
  return s.str();
}

bool valid(const Tree& t, const Placement& p) { return p.complete() && validate(t, p).empty(); }

void ac1() {
  bool ok = true;
  double worst_ms = 0;
  for (Mode mode : {Mode::kPaperPrefix, Mode::kWindow}) {
    for (const auto& [d, want] : {std::pair{std::vector<int>{5, 5, 4}, true}, {std::vector<int>{5, 5, 5}, false}}) {
      const Tree t = oracle::caterpillar(d);
      std::vector<double> ms;
      bool verdict = false;
      for (int rep = 0; rep < 5; ++rep) ms.push_back(1e3 * time_s([&] { verdict = decide(t, mode).realizable; }));
      std::sort(ms.begin(), ms.end());
      worst_ms = std::max(worst_ms, ms[2]);
      ok = ok && verdict == want && ms[2] < kSmallDecideBudgetMs;
    }
  }
  report(1, ok, "(5,5,4) accepted, (5,5,5) rejected in both modes",
         "slowest median decide " + fmt(worst_ms, 4) + " ms (limit " + fmt(kSmallDecideBudgetMs, 0) + " ms)");
}

void ac2() {
  const Verdict k16 = decide(star_tree(6), Mode::kWindow, true);
  const bool k16_ok = k16.realizable && k16.witness && valid(star_tree(6), *k16.witness);
  const bool k17_ok = !decide(star_tree(7)).realizable;
  std::mt19937_64 rng(7001);
  int accepted = 0;
  for (int i = 0; i < kRandomLowDegree; ++i) {
    const Tree t = random_caterpillar(std::uniform_int_distribution<int>(2, 2000)(rng), 4, rng);
    accepted += decide(t).realizable ? 1 : 0;
  }
  report(2, k16_ok && k17_ok && accepted == kRandomLowDegree, "degree bounds",
         std::string("K1,6 witness valid=") + (k16_ok ? "yes" : "no") + ", K1,7 rejected=" + (k17_ok ? "yes" : "no") +
             ", max-degree-4 caterpillars accepted " + std::to_string(accepted) + "/" + std::to_string(kRandomLowDegree));
}

void ac3() {
  std::mt19937_64 rng(7002);
  const Tree small = random_caterpillar(100000, 6, rng);
  const Tree large = random_caterpillar(1000000, 6, rng);
  // Each timed run starts with caches evicted, so the smaller input does not
  // profit from staying resident in cache between repetitions.
  std::vector<unsigned char> evict(kCacheEvictBytes, 0);
  auto best_of = [&](const Tree& t) {
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      for (std::size_t i = 0; i < evict.size(); i += 64) ++evict[i];
      best = std::min(best, time_s([&] { (void)decide(t); }));
    }
    return best;
  };
  best_of(small);  // warm-up
  const double ts = best_of(small);
  const double tl = best_of(large);
  const double ratio = tl / ts;
  report(3, tl < kLinearLargeBudgetS && ratio >= kLinearRatioLo && ratio <= kLinearRatioHi, "linear-time recognition",
         "1e5 nodes " + fmt(ts * 1e3) + " ms, 1e6 nodes " + fmt(tl * 1e3) + " ms, ratio " + fmt(ratio, 2) +
             " (accepted " + fmt(kLinearRatioLo, 1) + ".." + fmt(kLinearRatioHi, 1) + ", best of 5, caches evicted)");
}

void ac4() {
  int trees = 0, verdict_mismatch = 0, set_mismatch = 0;
  const double secs = time_s([&] {
    for (int n = 1; n <= 9; ++n) {
      for (const Tree& t : enumerate_trees(n)) {
        ++trees;
        std::set<CanonicalPlacement> brute;
        oracle::brute_force_placements(t, 4, [&](const std::vector<Cell>& c) { brute.insert(canonicalize(c)); });
        const bool search_yes = !embed_search(t).placements.empty();
        if (search_yes != !brute.empty()) ++verdict_mismatch;
        SearchOptions full;
        full.break_sibling_symmetry = false;
        const auto all = embed_search(t, full).placements;
        if (std::set<CanonicalPlacement>(all.begin(), all.end()) != brute) ++set_mismatch;
      }
    }
  });
  report(4, verdict_mismatch == 0 && set_mismatch == 0 && secs < kBruteForceBudgetS, "oracle completeness, trees <= 9 nodes",
         std::to_string(trees) + " trees, verdict mismatches " + std::to_string(verdict_mismatch) +
             ", placement-set mismatches " + std::to_string(set_mismatch) + ", " + fmt(secs, 1) + " s (limit " +
             fmt(kBruteForceBudgetS, 0) + " s)");
}

void ac5() {
  const HexagonSpec h = hexagon_tree(3);
  SearchResult res;
  const double secs = time_s([&] { res = embed_search(h.tree); });
  int good = 0;
  for (const auto& p : res.placements) {
    const Cell a = p.cells[static_cast<std::size_t>(h.end_a())];
    const Cell b = p.cells[static_cast<std::size_t>(h.end_b())];
    const Cell c = p.cells[static_cast<std::size_t>(h.red_path[3])];
    bool on_line = false;
    for (int d = 0; d < 6; ++d) on_line = on_line || (b - a == direction(d) * 6);
    good += (on_line && a - c == c - b) ? 1 : 0;
  }
  const int classes = distinguishable_count(res.placements, h.red_path);
  const bool ok = res.exhaustive && !res.placements.empty() && good == static_cast<int>(res.placements.size()) &&
                  classes == 1 && secs < kHexagonBudgetS;
  report(5, ok, "radius-3 hexagon rigidity",
         std::to_string(res.placements.size()) + " placements, " + std::to_string(good) +
             " with red ends collinear through the center at distance 6, distinguishable=" + std::to_string(classes) +
             ", " + fmt(secs, 2) + " s");
}

void ac6() {
  const GadgetGraph g = branching_gadget();
  SearchOptions opt;
  opt.marked = g.red;
  SearchResult res;
  const double secs = time_s([&] { res = embed_search(g.tree, opt); });
  const int classes = distinguishable_count(res.placements, g.red);
  report(6, res.exhaustive && classes == 2, "branching gadget",
         "trunk length " + std::to_string(kFrozenTrunkLength) + ", " + std::to_string(g.tree.node_count()) + " nodes, " +
             std::to_string(res.placements.size()) + " placements, distinguishable=" + std::to_string(classes) + ", " +
             fmt(secs, 2) + " s");
}

void ac7() {
  const GadgetGraph a = hexagon_gadget(3);
  const GadgetGraph two = chain(a, a.anchor("end-b"), a, a.anchor("end-a"));
  const NodeId left = two.anchor("end-a"), right = two.anchor("end-b"), shared = a.anchor("end-b");
  const auto res = embed_search(two.tree);
  int exceptions = 0;
  for (const auto& p : res.placements) {
    auto at = [&](NodeId v) { return p.cells[static_cast<std::size_t>(v)]; };
    bool line = false;
    for (int d = 0; d < 6; ++d) line = line || at(right) - at(left) == direction(d) * 12;
    if (!line || at(shared) - at(left) != at(right) - at(shared)) ++exceptions;
  }
  report(7, res.exhaustive && !res.placements.empty() && exceptions == 0, "two-hexagon chain collinearity",
         std::to_string(res.placements.size()) + " placements, " + std::to_string(exceptions) + " exceptions");
}

void ac8(const std::filesystem::path& report_dir) {
  int instances = 0, window_disagree = 0;
  std::vector<std::string> discrepancies;
  bool saw_266 = false;
  std::vector<int> d;
  std::function<void()> rec = [&] {
    if (!d.empty()) {
      auto r = d;
      std::reverse(r.begin(), r.end());
      if (d <= r) {
        ++instances;
        const Tree t = oracle::caterpillar(d);
        const bool grid = find_placement(t).has_value();
        const bool window = decide(t, Mode::kWindow).realizable;
        if (window != grid) ++window_disagree;
        std::vector<std::vector<int>> orientations{d};
        if (r != d) orientations.push_back(r);
        for (const auto& orient : orientations) {
          const bool prefix = prefix_check(Spine::from_degrees(orient)).realizable;
          if (prefix != grid) {
            std::string seq;
            for (int x : orient) seq += (seq.empty() ? "" : ",") + std::to_string(x);
            discrepancies.push_back("{\"degrees\":[" + seq + "],\"paper_prefix\":" + (prefix ? "true" : "false") +
                                    ",\"grid_oracle\":" + (grid ? "true" : "false") + "}");
            if (orient == std::vector<int>{2, 6, 6} && prefix && !grid) saw_266 = true;
          }
        }
      }
    }
    if (d.size() == 4) return;
    for (int x = 2; x <= 6; ++x) {
      d.push_back(x);
      rec();
      d.pop_back();
    }
  };
  const double secs = time_s(rec);
  const auto path = report_dir / "prefix_discrepancies.json";
  {
    std::ofstream out(path);
    out << "{\"instances\":" << instances << ",\"window_disagreements\":" << window_disagree << ",\"discrepancies\":[";
    for (std::size_t i = 0; i < discrepancies.size(); ++i) out << (i ? "," : "") << "\n  " << discrepancies[i];
    out << "\n]}\n";
  }
  report(8, window_disagree == 0 && saw_266, "prefix/window audit against the grid oracle",
         std::to_string(instances) + " sequences up to reversal, window disagreements " +
             std::to_string(window_disagree) + ", paper-prefix discrepancies " + std::to_string(discrepancies.size()) +
             " (includes (2,6,6): " + (saw_266 ? "yes" : "no") + "), report " + path.string() + ", " + fmt(secs, 1) +
             " s");
}

void ac9() {
  auto suite = oracle::formula_suite();
  suite.push_back({4, {{1, 2, 3}, {1, -2, 4}, {1, 3, -4}}});
  int disagreements = 0, positives = 0, bad_certificates = 0, errors = 0;
  const double secs = time_s([&] {
    for (const auto& sf : suite) {
      try {
        const CnfFormula f = CnfFormula::make(sf.n, sf.clauses);
        const bool nae = oracle::nae_satisfiable(sf.n, sf.clauses);
        const EngineDecision d = decide_engine(f);
        if (d.realizable != nae || d.realizable != nae_solve_bruteforce(f).has_value()) ++disagreements;
        if (d.realizable) {
          ++positives;
          if (!d.placement || !valid(build_engine_tree(f).tree, *d.placement) || !nae_satisfied(f, *d.flips)) {
            ++bad_certificates;
          }
        }
      } catch (const Error&) {
        ++errors;
      }
    }
  });
  report(9, disagreements == 0 && bad_certificates == 0 && errors == 0 && secs < kReductionBudgetS,
         "reduction equivalence (n <= 4, m <= 4)",
         std::to_string(suite.size()) + " formulas, " + std::to_string(positives) + " realizable, disagreements " +
             std::to_string(disagreements) + ", invalid certificates " + std::to_string(bad_certificates) +
             ", errors " + std::to_string(errors) + ", " + fmt(secs, 1) + " s (limit " + fmt(kReductionBudgetS, 0) +
             " s)");
}

void ac10() {
  std::string detail;
  bool ok = true;
  const char* names[] = {"two-literal", "three-literal", "unit"};
  for (int family = 0; family < 3; ++family) {
    std::vector<std::array<double, 3>> rows;
    for (int n = 2; n <= 6; ++n) {
      for (int m = 0; m <= 4; ++m) {
        std::vector<std::vector<int>> clauses;
        for (int j = 0; j < m; ++j) {
          const int a = j % n + 1, b = (j + 1) % n + 1, c = (j + 2) % n + 1;
          if (family == 0) {
            clauses.push_back({a, -b});
          } else if (family == 1) {
            std::vector<int> cl{a, -b};
            if (c != a) cl.push_back(c);
            clauses.push_back(cl);
          } else {
            clauses.push_back({a});
          }
        }
        rows.push_back({static_cast<double>(n * n), static_cast<double>(m * n),
                        static_cast<double>(build_engine_tree(CnfFormula::make(n, clauses)).tree.node_count())});
      }
    }
    const auto fit = oracle::chebyshev_fit(rows);
    ok = ok && fit.max_relative_residual < kSizeFitTolerance && fit.coef[1] > 0 && fit.coef[2] > 0;
    detail += std::string(family ? "; " : "") + names[family] + ": a=" + fmt(fit.coef[0], 0) + " b=" +
              fmt(fit.coef[1], 1) + " c=" + fmt(fit.coef[2], 1) + " max rel. residual " +
              fmt(fit.max_relative_residual, 4);
  }
  report(10, ok, "engine size fits a + b n^2 + c m n (minimax)", detail + " (limit " + fmt(kSizeFitTolerance, 2) + ")");
}

void ac11() {
  const auto dir = cli::scratch("acceptance");
  const std::string deg554 = cli::write(dir, "deg554.tree", to_edge_list(oracle::caterpillar({5, 5, 4})));
  const std::string reference = cli::write(dir, "reference.cnf", "p cnf 4 3\n1 2 3 0\n1 -2 4 0\n1 3 -4 0\n");
  const std::string w = cli::binary();
  const std::string hex = cli::write(dir, "hex.json", cli::run(w + " gadget hexagon --radius 3").out);
  const std::string branching = cli::write(dir, "br.json", cli::run(w + " gadget branching").out);
  const std::string engine = cli::write(dir, "engine.json", cli::run(w + " reduce " + reference).out);
  const std::string cert = cli::write(dir, "cert.json", cli::run(w + " engine-decide " + engine).out);
  const std::string witness = cli::write(dir, "w.json", cli::run(w + " realize " + deg554).out);
  const std::vector<std::string> commands = {
      "recognize " + deg554,
      "recognize --mode paper-prefix --witness " + deg554,
      "realize " + deg554,
      "oracle --all " + deg554,
      "oracle --red --all " + hex,
      "oracle --red " + branching,
      "gadget hexagon --radius 4",
      "gadget branching",
      "reduce " + reference,
      "nae-solve " + reference,
      "engine-decide " + engine,
      "engine-decide " + reference,
      "render " + deg554 + " " + witness,
      "render " + engine + " " + cert,
      "render --legend " + hex + " " + hex,
  };
  int differing = 0;
  std::string which;
  for (const auto& c : commands) {
    const auto a = cli::run(w + " --jobs 1 " + c);
    const auto b = cli::run(w + " --jobs 1 " + c);
    const auto e = cli::run(w + " --jobs 8 " + c);
    if (a.out.empty() || a.out != b.out || a.out != e.out || a.exit_code != e.exit_code) {
      ++differing;
      which += " [" + c.substr(0, c.find(' ')) + "]";
    }
  }
  report(11, differing == 0, "byte-identical CLI output across runs and --jobs 1/8",
         std::to_string(commands.size()) + " commands, " + std::to_string(differing) + " differing" + which);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path report_dir = std::filesystem::current_path();
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--report-dir") report_dir = argv[i + 1];
  }
  const std::vector<std::function<void()>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7,
                                                       [&] { ac8(report_dir); }, ac9, ac10, ac11};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, "raised an exception", e.what());
    }
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
