#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wudcr/error.hpp"
#include "wudcr/placement.hpp"
#include "wudcr/recognizer.hpp"

using namespace wudcr;

namespace {

bool grid_oracle(const Tree& t) { return find_placement(t).has_value(); }

// Witness sanity: valid, and leaves sit next to their spine node.
void check_witness(const Tree& t, const Placement& p) {
  ASSERT_TRUE(p.complete());
  EXPECT_TRUE(validate(t, p).empty());
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.degree(v) != 1) continue;
    const NodeId parent = t.neighbors(v)[0];
    EXPECT_EQ(grid_distance(p.at(v), p.at(parent)), 1);
  }
}

}  // namespace

TEST(Recognizer, PrefixExamples) {
  EXPECT_TRUE(prefix_check(Spine::from_degrees({5, 5, 4})).realizable);
  const Verdict v = prefix_check(Spine::from_degrees({5, 5, 5}));
  EXPECT_FALSE(v.realizable);
  ASSERT_TRUE(v.failing_window);
  EXPECT_EQ(*v.failing_window, std::make_pair(1, 3));
  EXPECT_TRUE(prefix_check(Spine::from_degrees(std::vector<int>(40, 2))).realizable);
  EXPECT_TRUE(prefix_check(Spine::from_degrees({6})).realizable);
}

TEST(Recognizer, PrefixFailingIndexSatisfiesBound) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> d(std::uniform_int_distribution<std::size_t>(1, 12)(rng));
    for (int& x : d) x = std::uniform_int_distribution<int>(2, 6)(rng);
    const Verdict v = prefix_check(Spine::from_degrees(d));
    int sum = 0;
    bool want = true;
    for (std::size_t l = 1; l <= d.size(); ++l) {
      sum += d[l - 1];
      if (sum > 4 * static_cast<int>(l) + 2) {
        want = false;
        ASSERT_TRUE(v.failing_window);
        EXPECT_EQ(v.failing_window->second, static_cast<int>(l));
        break;
      }
    }
    EXPECT_EQ(v.realizable, want);
  }
}

TEST(Recognizer, WindowExamples) {
  EXPECT_TRUE(window_check(Spine::from_degrees({5, 5, 4})).realizable);
  const Verdict v = window_check(Spine::from_degrees({2, 6, 6}));
  EXPECT_FALSE(v.realizable);
  EXPECT_EQ(*v.failing_window, std::make_pair(2, 3));
  EXPECT_TRUE(prefix_check(Spine::from_degrees({2, 6, 6})).realizable);
  EXPECT_FALSE(prefix_check(Spine::from_degrees({6, 6, 2})).realizable);
  EXPECT_TRUE(window_check(Spine::from_degrees({6, 2, 6})).realizable);
}

TEST(Recognizer, GridOracleOnTheDisputedSequences) {
  EXPECT_FALSE(grid_oracle(oracle::caterpillar({2, 6, 6})));
  EXPECT_FALSE(grid_oracle(oracle::caterpillar({6, 6, 2})));
  EXPECT_TRUE(grid_oracle(oracle::caterpillar({6, 2, 6})));
  EXPECT_TRUE(grid_oracle(oracle::caterpillar({5, 5, 4})));
}

TEST(Recognizer, WindowMatchesAllWindowsBruteForce) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<int> d(std::uniform_int_distribution<std::size_t>(1, 10)(rng));
    for (int& x : d) x = std::uniform_int_distribution<int>(2, 6)(rng);
    const Spine s = Spine::from_degrees(d);
    const Verdict v = window_check(s);
    int best = INT32_MIN;
    std::pair<int, int> arg;
    for (std::size_t p = 1; p <= d.size(); ++p) {
      int sum = 0;
      for (std::size_t q = p; q <= d.size(); ++q) {
        sum += d[q - 1] - 4;
        if (sum > best) {
          best = sum;
          arg = {static_cast<int>(p), static_cast<int>(q)};
        }
      }
    }
    EXPECT_EQ(v.realizable, best <= 2);
    if (!v.realizable) {
      const auto [p, q] = *v.failing_window;
      int sum = 0;
      for (int i = p; i <= q; ++i) sum += d[static_cast<std::size_t>(i - 1)];
      EXPECT_GT(sum, 4 * (q - p + 1) + 2);
      EXPECT_EQ(sum - 4 * (q - p + 1), best);
    }
    // Window implies prefix; window is reversal-invariant.
    if (v.realizable) EXPECT_TRUE(prefix_check(s).realizable);
    EXPECT_EQ(window_check(s.reversed()).realizable, v.realizable);
  }
}

TEST(Recognizer, DecideExamples) {
  EXPECT_FALSE(decide(star_tree(7)).realizable);
  EXPECT_TRUE(decide(Tree()).realizable);
  for (Mode m : {Mode::kPaperPrefix, Mode::kWindow}) {
    EXPECT_TRUE(decide(oracle::caterpillar({5, 5, 4}), m).realizable);
    EXPECT_FALSE(decide(oracle::caterpillar({5, 5, 5}), m).realizable);
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_caterpillar(std::uniform_int_distribution<int>(2, 400)(rng), 4, rng);
    EXPECT_TRUE(decide(t).realizable);
  }
}

TEST(Recognizer, NonCaterpillarsAreErrors) {
  const Tree spider = Tree::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  try {
    decide(spider);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotACaterpillar);
  }
}

TEST(Recognizer, ModeNames) {
  EXPECT_EQ(parse_mode("window"), Mode::kWindow);
  EXPECT_EQ(parse_mode("paper-prefix"), Mode::kPaperPrefix);
  EXPECT_EQ(to_string(parse_mode("paper-prefix")), "paper-prefix");
  EXPECT_THROW(parse_mode("prefix"), Error);
}

TEST(Recognizer, RealizeExamples) {
  const Placement p5 = realize_caterpillar(path_tree(5));
  check_witness(path_tree(5), p5);
  const Cell step = p5.at(1) - p5.at(0);
  for (NodeId v = 1; v < 5; ++v) EXPECT_EQ(p5.at(v) - p5.at(v - 1), step);

  const Tree k16 = star_tree(6);
  const Placement s = realize_caterpillar(k16);
  check_witness(k16, s);
  for (NodeId v = 1; v <= 6; ++v) EXPECT_EQ(grid_distance(s.at(0), s.at(v)), 1);

  const Tree deg554 = oracle::caterpillar({5, 5, 4});
  check_witness(deg554, realize_caterpillar(deg554));
  check_witness(path_tree(2), realize_caterpillar(path_tree(2)));
  check_witness(Tree(), realize_caterpillar(Tree()));
}

TEST(Recognizer, GreedyHandlesLargeWindowFeasibleCaterpillars) {
  // Above the fallback size, so only the greedy can produce these.
  std::mt19937_64 rng(24);
  int checked = 0;
  while (checked < 300) {
    std::vector<int> d(std::uniform_int_distribution<std::size_t>(30, 80)(rng));
    for (int& x : d) x = std::uniform_int_distribution<int>(2, 6)(rng);
    const Spine s = Spine::from_degrees(d);
    if (!window_check(s).realizable) continue;
    const Tree t = oracle::caterpillar(d);
    if (t.node_count() <= kRealizeFallbackNodes) continue;
    const Verdict v = decide(t, Mode::kWindow, true);
    ASSERT_TRUE(v.realizable);
    ASSERT_TRUE(v.witness);
    check_witness(t, *v.witness);
    ++checked;
  }
}

TEST(Recognizer, GreedyPrefersCellsSharedWithThePreviousNode) {
  // (4,5,5) fails if v_2 spends the cells it shares with v_1 last.
  std::vector<int> d{4, 5, 5};
  for (int i = 0; i < 70; ++i) d.push_back(2);
  const Tree t = oracle::caterpillar(d);
  ASSERT_GT(t.node_count(), kRealizeFallbackNodes);
  check_witness(t, realize_caterpillar(t));
}

TEST(Recognizer, WindowAgreesWithGridOracleOnSmallCaterpillars) {
  // Every degree sequence in {2..6} with at most 16 nodes and some degree >= 5,
  // one orientation per reversal pair.
  int checked = 0;
  std::vector<int> d;
  std::function<void(int)> rec = [&](int nodes) {
    if (!d.empty()) {
      auto r = d;
      std::reverse(r.begin(), r.end());
      const bool big = *std::max_element(d.begin(), d.end()) >= 5;
      if (big && d <= r) {
        const Tree t = oracle::caterpillar(d);
        const Verdict v = decide(t, Mode::kWindow, true);
        EXPECT_EQ(v.realizable, grid_oracle(t)) << ::testing::PrintToString(d);
        if (v.realizable) {
          ASSERT_TRUE(v.witness);
          check_witness(t, *v.witness);
        }
        ++checked;
      }
    }
    for (int x = 2; x <= 6; ++x) {
      if (nodes + x - 1 > 16) break;
      d.push_back(x);
      rec(nodes + x - 1);
      d.pop_back();
    }
  };
  rec(2);
  EXPECT_GT(checked, 100);
}
