#pragma once

// Exact planar lattice geometry. Areas are carried doubled so that every
// quantity is an integer; nothing in here touches floating point.

#include <compare>
#include <span>
#include <vector>

#include "cmi/checked.hpp"

namespace cmi {

struct LatticePoint {
  Int u = 0;  // x-exponent axis
  Int v = 0;  // y-exponent axis

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) {
  return {checked_add(a.u, b.u), checked_add(a.v, b.v)};
}

inline LatticePoint operator-(LatticePoint a, LatticePoint b) {
  return {checked_sub(a.u, b.u), checked_sub(a.v, b.v)};
}

inline LatticePoint operator*(Int k, LatticePoint p) {
  return {checked_mul(k, p.u), checked_mul(k, p.v)};
}

/// z-component of (a - o) x (b - o). Positive for a left turn o -> a -> b.
Int cross(LatticePoint o, LatticePoint a, LatticePoint b);

/// Twice the Euclidean area of a polygon.
struct DoubledArea {
  Int value = 0;
  bool degenerate = false;  // fewer than three non-collinear vertices

  friend bool operator==(const DoubledArea&, const DoubledArea&) = default;
};

/// A lattice polygon held as a counterclockwise vertex cycle with repeated
/// and collinear vertices removed. Fewer than three surviving vertices means
/// the input was a point or a segment; such polygons are kept (Minkowski sum
/// with a point is a translation) but area and count operations reject them.
class LatticePolygon {
public:
  LatticePolygon() = default;

  /// Normalizes `vertices` (closed implicitly, either orientation).
  explicit LatticePolygon(std::span<const LatticePoint> vertices);
  LatticePolygon(std::initializer_list<LatticePoint> vertices)
      : LatticePolygon(std::span<const LatticePoint>(vertices.begin(), vertices.size())) {}

  static LatticePolygon point(LatticePoint p);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool is_degenerate() const noexcept { return vertices_.size() < 3; }
  bool is_point() const noexcept { return vertices_.size() == 1; }
  bool is_convex() const noexcept { return convex_; }

  LatticePolygon translated(LatticePoint t) const;

  /// k * P for k >= 0; 0 * P is the origin.
  LatticePolygon scaled(Int k) const;

  /// Equality of vertex cycles up to the choice of starting vertex.
  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b);

private:
  std::vector<LatticePoint> vertices_;
  bool convex_ = false;
};

/// Lattice points on the closed segment [p1, p2]; 1 when p1 == p2.
Int segment_lattice_count(LatticePoint p1, LatticePoint p2);

DoubledArea doubled_area(const LatticePolygon& polygon);

/// b_P. Throws DomainError for degenerate polygons.
Int boundary_lattice_count(const LatticePolygon& polygon);

/// i_P via Pick's theorem. Requires a simple polygon.
Int interior_lattice_count(const LatticePolygon& polygon);

/// Convex Minkowski sum by merging the edge sequences in angular order.
/// Either argument may be a single point; any other degenerate or
/// non-convex argument is a DomainError.
LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

/// Doubled mixed area 2*(V(A+B) - V(A) - V(B)). A point contributes area 0.
Int mixed_area(const LatticePolygon& a, const LatticePolygon& b);

}  // namespace cmi
