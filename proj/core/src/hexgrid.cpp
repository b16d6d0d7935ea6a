#include "wudcr/hexgrid.hpp"

#include <cmath>
#include <cstdlib>

namespace wudcr {

std::array<Cell, 6> neighbors(Cell c) {
  std::array<Cell, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = c + kDirections[i];
  return out;
}

int grid_distance(Cell a, Cell b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::vector<Cell> ring(Cell center, int k) {
  if (k <= 0) return {center};
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(6 * k));
  for (int side = 0; side < 6; ++side) {
    const Cell corner = center + direction(side) * k;
    const Cell step = direction(side + 2);
    for (int t = 0; t < k; ++t) out.push_back(corner + step * t);
  }
  return out;
}

std::vector<Cell> ball(Cell center, int k) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(3 * k * (k + 1) + 1));
  for (int d = 0; d <= k; ++d) {
    for (Cell c : ring(center, d)) out.push_back(c);
  }
  return out;
}

Point to_euclidean(Cell c) {
  static const double kSqrt3 = std::sqrt(3.0);
  return {2.0 * c.q + c.r, c.r * kSqrt3};
}

double euclidean_distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Cell rotate60(Cell c, int times) {
  times = ((times % 6) + 6) % 6;
  for (int i = 0; i < times; ++i) {
    // cube (q, r, s) -> (-r, -s, -q)
    const int s = -c.q - c.r;
    c = Cell{-c.r, -s};
  }
  return c;
}

Cell reflect_x(Cell c) { return {c.q + c.r, -c.r}; }

Cell Isometry::apply_linear(Cell c) const { return rotate60(reflect ? reflect_x(c) : c, rotation); }

Cell Isometry::apply(Cell c) const { return apply_linear(c) + translation; }

Isometry Isometry::compose(const Isometry& inner) const {
  // R^a M^fa R^b M^fb = R^(a +/- b) M^(fa ^ fb), since M R = R^-1 M.
  Isometry out;
  out.rotation = (((reflect ? rotation - inner.rotation : rotation + inner.rotation) % 6) + 6) % 6;
  out.reflect = reflect != inner.reflect;
  out.translation = apply(inner.translation);
  return out;
}

Isometry Isometry::inverse() const {
  Isometry inv;
  // (R^a M^f)^-1 = M^f R^-a = R^(f ? a : -a) M^f
  inv.reflect = reflect;
  inv.rotation = (((reflect ? rotation : -rotation) % 6) + 6) % 6;
  inv.translation = -inv.apply_linear(translation);
  return inv;
}

std::array<Isometry, 12> point_group() {
  std::array<Isometry, 12> out{};
  std::size_t i = 0;
  for (int f = 0; f < 2; ++f) {
    for (int rot = 0; rot < 6; ++rot) out[i++] = Isometry{rot, f == 1, {}};
  }
  return out;
}

}  // namespace wudcr
