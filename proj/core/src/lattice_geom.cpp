#include "cmi/lattice_geom.hpp"

#include <algorithm>
#include <tuple>

namespace cmi {

namespace {

Int cross_vec(LatticePoint a, LatticePoint b) {
  return checked_sub(checked_mul(a.u, b.v), checked_mul(a.v, b.u));
}

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_plane(LatticePoint d) { return (d.v > 0 || (d.v == 0 && d.u > 0)) ? 0 : 1; }

bool angle_less(LatticePoint a, LatticePoint b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross_vec(a, b) > 0;
}

Int signed_doubled_area(const std::vector<LatticePoint>& pts) {
  Int acc = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    acc = checked_add(acc, cross_vec(p, q));
  }
  return acc;
}

void drop_repeats(std::vector<LatticePoint>& pts) {
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
}

// Removes vertices whose neighbours are collinear with them until none are
// left. Spikes (A, B, A) collapse as well.
void prune_collinear(std::vector<LatticePoint>& pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      const auto& prev = pts[(i + pts.size() - 1) % pts.size()];
      const auto& next = pts[(i + 1) % pts.size()];
      if (cross(prev, pts[i], next) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        drop_repeats(pts);
        changed = true;
        break;
      }
    }
  }
  if (pts.size() == 2 && pts[0] == pts[1]) pts.pop_back();
}

// All turns left and the edge directions wind around exactly once.
bool check_convex(const std::vector<LatticePoint>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) return true;
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % n];
    const auto& c = pts[(i + 2) % n];
    if (cross(a, b, c) <= 0) return false;
    if (angle_less(c - b, b - a)) ++wraps;
  }
  return wraps == 1;
}

}  // namespace

Int cross(LatticePoint o, LatticePoint a, LatticePoint b) { return cross_vec(a - o, b - o); }

LatticePolygon::LatticePolygon(std::span<const LatticePoint> vertices)
    : vertices_(vertices.begin(), vertices.end()) {
  drop_repeats(vertices_);
  prune_collinear(vertices_);
  if (vertices_.size() >= 3 && signed_doubled_area(vertices_) < 0)
    std::reverse(vertices_.begin(), vertices_.end());
  convex_ = check_convex(vertices_);
}

LatticePolygon LatticePolygon::point(LatticePoint p) { return LatticePolygon({p}); }

LatticePolygon LatticePolygon::translated(LatticePoint t) const {
  std::vector<LatticePoint> moved;
  moved.reserve(vertices_.size());
  for (const auto& p : vertices_) moved.push_back(p + t);
  return LatticePolygon(moved);
}

LatticePolygon LatticePolygon::scaled(Int k) const {
  if (k < 0) throw DomainError("polygon scale factor must be nonnegative");
  if (k == 0) return point({0, 0});
  std::vector<LatticePoint> grown;
  grown.reserve(vertices_.size());
  for (const auto& p : vertices_) grown.push_back(k * p);
  return LatticePolygon(grown);
}

bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
  const auto& x = a.vertices_;
  const auto& y = b.vertices_;
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  const auto start = std::find(y.begin(), y.end(), x.front());
  if (start == y.end()) return false;
  const auto offset = static_cast<std::size_t>(start - y.begin());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[(i + offset) % y.size()]) return false;
  return true;
}

Int segment_lattice_count(LatticePoint p1, LatticePoint p2) {
  const auto d = p2 - p1;
  return checked_add(gcd(d.u, d.v), 1);
}

DoubledArea doubled_area(const LatticePolygon& polygon) {
  if (polygon.is_degenerate()) return {0, true};
  return {checked_abs(signed_doubled_area(polygon.vertices())), false};
}

Int boundary_lattice_count(const LatticePolygon& polygon) {
  if (polygon.is_degenerate()) throw DomainError("boundary count of a degenerate polygon");
  const auto& pts = polygon.vertices();
  Int total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    total = checked_add(total, segment_lattice_count(pts[i], pts[(i + 1) % pts.size()]) - 1);
  return total;
}

Int interior_lattice_count(const LatticePolygon& polygon) {
  if (polygon.is_degenerate()) throw DomainError("interior count of a degenerate polygon");
  const Int twice = checked_add(checked_sub(doubled_area(polygon).value, boundary_lattice_count(polygon)), 2);
  if (twice % 2 != 0) throw ConsistencyError("Pick parity violated: doubled area and boundary count disagree");
  if (twice < 0) throw ConsistencyError("Pick's theorem gave a negative interior count");
  return twice / 2;
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  if (a.is_point()) return b.translated(a.vertices().front());
  if (b.is_point()) return a.translated(b.vertices().front());
  if (a.is_degenerate() || b.is_degenerate())
    throw DomainError("Minkowski sum of a degenerate polygon other than a point");
  if (!a.is_convex() || !b.is_convex()) throw DomainError("Minkowski sum requires convex polygons");

  // Rotate both cycles to start at the lowest (v, u) vertex; the edges then
  // appear in increasing angle from direction (1, 0).
  auto rotated = [](const LatticePolygon& p) {
    auto pts = p.vertices();
    const auto lowest = std::min_element(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
      return std::tie(x.v, x.u) < std::tie(y.v, y.u);
    });
    std::rotate(pts.begin(), lowest, pts.end());
    return pts;
  };
  const auto pa = rotated(a);
  const auto pb = rotated(b);
  const std::size_t na = pa.size();
  const std::size_t nb = pb.size();

  std::vector<LatticePoint> out;
  out.reserve(na + nb);
  LatticePoint cursor = pa.front() + pb.front();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < na || j < nb) {
    out.push_back(cursor);
    const LatticePoint ea = i < na ? pa[(i + 1) % na] - pa[i] : LatticePoint{};
    const LatticePoint eb = j < nb ? pb[(j + 1) % nb] - pb[j] : LatticePoint{};
    if (j >= nb || (i < na && angle_less(ea, eb))) {
      cursor = cursor + ea;
      ++i;
    } else if (i >= na || angle_less(eb, ea)) {
      cursor = cursor + eb;
      ++j;
    } else {
      // parallel edges fuse into one
      cursor = cursor + ea + eb;
      ++i;
      ++j;
    }
  }
  LatticePolygon sum(out);
  if (!sum.is_convex()) throw ConsistencyError("Minkowski edge merge produced a non-convex polygon");
  return sum;
}

Int mixed_area(const LatticePolygon& a, const LatticePolygon& b) {
  const Int whole = doubled_area(minkowski_sum(a, b)).value;
  return checked_sub(checked_sub(whole, doubled_area(a).value), doubled_area(b).value);
}

}  // namespace cmi
