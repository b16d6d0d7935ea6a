#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wudcr/hexgrid.hpp"

using namespace wudcr;

namespace {

Cell random_cell(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> d(-span, span);
  return {d(rng), d(rng)};
}

Isometry random_isometry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rot(0, 5), flip(0, 1);
  return {rot(rng), flip(rng) == 1, random_cell(rng)};
}

}  // namespace

TEST(Hexgrid, NeighborsOfOrigin) {
  const auto n = neighbors({0, 0});
  const std::set<Cell> got(n.begin(), n.end());
  const std::set<Cell> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  EXPECT_EQ(got, want);
}

TEST(Hexgrid, NeighborsTranslate) {
  const auto n = neighbors({2, -1});
  std::set<Cell> got(n.begin(), n.end());
  std::set<Cell> want;
  for (Cell c : neighbors({0, 0})) want.insert(c + Cell{2, -1});
  EXPECT_EQ(got, want);
}

TEST(Hexgrid, NeighborsAreSixDistinctAndSymmetric) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Cell c = random_cell(rng);
    const auto n = neighbors(c);
    std::set<Cell> s(n.begin(), n.end());
    EXPECT_EQ(s.size(), 6u);
    EXPECT_FALSE(s.contains(c));
    for (Cell m : n) {
      const auto back = neighbors(m);
      EXPECT_NE(std::find(back.begin(), back.end(), c), back.end());
      EXPECT_TRUE(adjacent(c, m));
    }
  }
}

TEST(Hexgrid, DistanceExamples) {
  EXPECT_EQ(grid_distance({0, 0}, {0, 0}), 0);
  EXPECT_EQ(grid_distance({0, 0}, {1, 0}), 1);
  EXPECT_EQ(grid_distance({0, 0}, {2, -1}), oracle::bfs_distance({0, 0}, {2, -1}));
  EXPECT_EQ(grid_distance({0, 0}, {2, -1}), 2);
}

TEST(Hexgrid, DistanceMatchesBfs) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Cell a = random_cell(rng, 6), b = random_cell(rng, 6);
    EXPECT_EQ(grid_distance(a, b), oracle::bfs_distance(a, b));
  }
}

TEST(Hexgrid, MetricAxioms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Cell a = random_cell(rng), b = random_cell(rng), c = random_cell(rng);
    EXPECT_GE(grid_distance(a, b), 0);
    EXPECT_EQ(grid_distance(a, b) == 0, a == b);
    EXPECT_EQ(grid_distance(a, b), grid_distance(b, a));
    EXPECT_LE(grid_distance(a, c), grid_distance(a, b) + grid_distance(b, c));
  }
}

TEST(Hexgrid, RingSizesAndDistances) {
  EXPECT_EQ(ring({3, 4}, 0), (std::vector<Cell>{Cell{3, 4}}));
  const auto r1 = ring({0, 0}, 1);
  const auto n = neighbors({0, 0});
  EXPECT_EQ(std::set<Cell>(r1.begin(), r1.end()), std::set<Cell>(n.begin(), n.end()));
  for (int k = 1; k <= 10; ++k) {
    const Cell c{k, -2 * k};
    const auto r = ring(c, k);
    EXPECT_EQ(r.size(), static_cast<std::size_t>(6 * k));
    EXPECT_EQ(std::set<Cell>(r.begin(), r.end()).size(), r.size());
    for (Cell x : r) EXPECT_EQ(grid_distance(c, x), k);
  }
}

TEST(Hexgrid, RingTwoMatchesBoxFilter) {
  std::set<Cell> want;
  for (int q = -5; q <= 5; ++q)
    for (int r = -5; r <= 5; ++r)
      if (oracle::bfs_distance({0, 0}, {q, r}) == 2) want.insert({q, r});
  const auto got = ring({0, 0}, 2);
  EXPECT_EQ(std::set<Cell>(got.begin(), got.end()), want);
  EXPECT_EQ(want.size(), 12u);
}

TEST(Hexgrid, RingSideLayout) {
  const int k = 3;
  const auto r = ring({0, 0}, k);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(r[static_cast<std::size_t>(i * k)], direction(i) * k);
}

TEST(Hexgrid, EuclideanBasis) {
  const Point a = to_euclidean({1, 0});
  EXPECT_DOUBLE_EQ(a.x, 2.0);
  EXPECT_DOUBLE_EQ(a.y, 0.0);
  const Point b = to_euclidean({0, 1});
  EXPECT_DOUBLE_EQ(b.x, 1.0);
  EXPECT_NEAR(b.y, std::sqrt(3.0), 1e-12);
}

TEST(Hexgrid, TangencyIffAdjacent) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 3000; ++i) {
    const Cell a = random_cell(rng, 5), b = random_cell(rng, 5);
    const auto [ax, ay] = oracle::euclid(a);
    const auto [bx, by] = oracle::euclid(b);
    const double d = euclidean_distance(to_euclidean(a), to_euclidean(b));
    EXPECT_NEAR(d, std::hypot(ax - bx, ay - by), 1e-9);
    if (oracle::bfs_distance(a, b) == 1) {
      EXPECT_NEAR(d, 2.0, 1e-9);
    } else if (a != b) {
      EXPECT_GT(d, 2.0 + 1e-9);
    } else {
      EXPECT_EQ(d, 0.0);
    }
  }
}

TEST(Hexgrid, EuclideanInjectiveOnBall) {
  std::set<std::pair<long long, long long>> seen;
  for (Cell c : ball({0, 0}, 8)) {
    const Point p = to_euclidean(c);
    EXPECT_TRUE(seen.insert({std::llround(p.x * 1e6), std::llround(p.y * 1e6)}).second);
  }
}

TEST(Hexgrid, IsometryExamples) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Cell c = random_cell(rng);
    EXPECT_EQ(Isometry::identity().apply(c), c);
  }
  EXPECT_EQ((Isometry{3, false, {}}).apply({1, 0}), (Cell{-1, 0}));
}

TEST(Hexgrid, IsometriesPreserveDistanceAndCompose) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const Isometry f = random_isometry(rng), g = random_isometry(rng);
    const Cell a = random_cell(rng), b = random_cell(rng);
    EXPECT_EQ(grid_distance(f.apply(a), f.apply(b)), grid_distance(a, b));
    EXPECT_EQ(f.compose(g).apply(a), f.apply(g.apply(a)));
    EXPECT_EQ(f.inverse().apply(f.apply(a)), a);
    EXPECT_EQ(f.apply(a) - f.apply(b), f.apply_linear(a - b));
  }
}

TEST(Hexgrid, RotationIsSixtyDegrees) {
  for (int i = 0; i < 6; ++i) {
    const Point p = to_euclidean(rotate60({1, 0}, i));
    EXPECT_NEAR(p.x, 2.0 * std::cos(i * M_PI / 3), 1e-9);
    EXPECT_NEAR(p.y, 2.0 * std::sin(i * M_PI / 3), 1e-9);
    EXPECT_EQ(rotate60({1, 0}, i), direction(i));
  }
  const Point r = to_euclidean(reflect_x({1, 1}));
  const Point o = to_euclidean({1, 1});
  EXPECT_NEAR(r.x, o.x, 1e-12);
  EXPECT_NEAR(r.y, -o.y, 1e-12);
}

TEST(Hexgrid, PointGroupIsAGroup) {
  const auto g = point_group();
  std::set<Isometry> s(g.begin(), g.end());
  EXPECT_EQ(s.size(), 12u);
  for (const auto& a : g) {
    EXPECT_EQ(a.translation, (Cell{0, 0}));
    EXPECT_TRUE(s.contains(a.inverse()));
    for (const auto& b : g) EXPECT_TRUE(s.contains(a.compose(b)));
  }
}
