#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace wudcr {

/// A point of the triangular lattice in axial coordinates. Adjacent cells
/// are the centers of two tangent unit disks (lattice pitch 2).
struct Cell {
  int q = 0;
  int r = 0;

  constexpr auto operator<=>(const Cell&) const = default;

  constexpr Cell operator+(Cell o) const { return {q + o.q, r + o.r}; }
  constexpr Cell operator-(Cell o) const { return {q - o.q, r - o.r}; }
  constexpr Cell operator-() const { return {-q, -r}; }
  constexpr Cell operator*(int k) const { return {q * k, r * k}; }
};

struct CellHash {
  std::size_t operator()(Cell c) const noexcept {
    auto h = static_cast<std::size_t>(static_cast<unsigned>(c.q)) * 0x9E3779B97F4A7C15ull;
    return h ^ (static_cast<std::size_t>(static_cast<unsigned>(c.r)) + 0x7F4A7C15ull + (h << 6) + (h >> 2));
  }
};

/// Unit steps in counter-clockwise order starting at 0 degrees; index i is
/// the direction at i * 60 degrees under to_euclidean.
inline constexpr std::array<Cell, 6> kDirections = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

constexpr Cell direction(int i) { return kDirections[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }

std::array<Cell, 6> neighbors(Cell c);

int grid_distance(Cell a, Cell b);

constexpr bool adjacent(Cell a, Cell b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  const int ds = -dq - dr;
  const int m = (dq < 0 ? -dq : dq) > (dr < 0 ? -dr : dr) ? (dq < 0 ? -dq : dq) : (dr < 0 ? -dr : dr);
  return (m > (ds < 0 ? -ds : ds) ? m : (ds < 0 ? -ds : ds)) == 1;
}

/// Cells at grid distance exactly k, walked counter-clockwise from
/// center + k * direction(0). Side i runs from corner k * direction(i)
/// (inclusive) towards corner k * direction(i + 1) (exclusive), so the cell
/// at position t of side i is ring(c, k)[i * k + t]. {center} for k = 0.
std::vector<Cell> ring(Cell center, int k);

/// All cells within distance k, ordered by distance and then ring order.
std::vector<Cell> ball(Cell center, int k);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Disk center of a cell for unit disks: x = 2q + r, y = r * sqrt(3).
Point to_euclidean(Cell c);

double euclidean_distance(Point a, Point b);

/// Grid symmetry: rotate by rotation * 60 degrees after an optional
/// reflection across the x-axis, then translate.
struct Isometry {
  int rotation = 0;
  bool reflect = false;
  Cell translation{};

  static constexpr Isometry identity() { return {}; }
  static constexpr Isometry translate(Cell t) { return {0, false, t}; }

  Cell apply(Cell c) const;
  Cell apply_linear(Cell c) const;
  /// (*this) after `inner`: result.apply(c) == apply(inner.apply(c)).
  Isometry compose(const Isometry& inner) const;
  Isometry inverse() const;

  auto operator<=>(const Isometry&) const = default;
};

Cell rotate60(Cell c, int times = 1);
Cell reflect_x(Cell c);

/// The 12 isometries fixing the origin.
std::array<Isometry, 12> point_group();

}  // namespace wudcr
