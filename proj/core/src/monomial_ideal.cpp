#include "cmi/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

namespace cmi {

MonomialIdeal MonomialIdeal::normalize(std::span<const LatticePoint> raw) {
  if (raw.empty()) throw DomainError("monomial ideal needs at least one generator");
  std::vector<LatticePoint> pts(raw.begin(), raw.end());
  for (const auto& p : pts)
    if (p.u < 0 || p.v < 0) throw DomainError("negative exponent in monomial generator");
  std::sort(pts.begin(), pts.end());

  // Sorted by (u, v) ascending: a point survives iff its v is strictly below
  // every v kept so far.
  std::vector<LatticePoint> gens;
  Int lowest_v = std::numeric_limits<Int>::max();
  for (const auto& p : pts) {
    if (p.v < lowest_v) {
      gens.push_back(p);
      lowest_v = p.v;
    }
  }
  return MonomialIdeal(std::move(gens));
}

bool MonomialIdeal::contains(LatticePoint p) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.u <= p.u && g.v <= p.v; });
}

NewtonBoundary::NewtonBoundary(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DomainError("Newton boundary needs at least two vertices");
  if (vertices_.front().u != 0 || vertices_.back().v != 0)
    throw DomainError("Newton boundary must run from the v-axis to the u-axis");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i + 1].u <= vertices_[i].u || vertices_[i + 1].v >= vertices_[i].v)
      throw DomainError("Newton boundary vertices must move strictly right and down");
    if (i + 2 < vertices_.size() && cross(vertices_[i], vertices_[i + 1], vertices_[i + 2]) <= 0)
      throw DomainError("Newton boundary edge slopes must strictly decrease");
  }
}

Int NewtonBoundary::lattice_count() const {
  Int total = 1;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    total = checked_add(total, segment_lattice_count(vertices_[i], vertices_[i + 1]) - 1);
  return total;
}

bool NewtonBoundary::above(LatticePoint p) const {
  if (p.u < 0 || p.v < 0) return false;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const auto& s = vertices_[i];
    const auto& t = vertices_[i + 1];
    // p is on or above the line s->t iff the turn s -> t -> p is not clockwise
    if (cross(s, t, p) < 0) return false;
  }
  return true;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return false;
  const auto& g = ideal.generators();
  return g.front().u == 0 && g.back().v == 0;
}

NewtonBoundary newton_boundary(const MonomialIdeal& ideal) {
  if (!is_m_primary(ideal)) throw NotPrimaryError("ideal is not m-primary; its Newton boundary is unbounded");
  // Monotone-chain lower hull over generators already sorted by u.
  std::vector<LatticePoint> hull;
  for (const auto& p : ideal.generators()) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return NewtonBoundary(std::move(hull));
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const auto boundary = newton_boundary(ideal);
  const auto& vs = boundary.vertices();
  std::vector<LatticePoint> column_minima;
  column_minima.reserve(static_cast<std::size_t>(boundary.a()) + 1);
  for (Int u = 0; u <= boundary.a(); ++u) {
    // Smallest v with d*u + c*v >= d*a_i + c*b_i for every edge.
    Int v = 0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const Int c = vs[i + 1].u - vs[i].u;
      const Int d = vs[i].v - vs[i + 1].v;
      const Int rhs = checked_sub(checked_add(checked_mul(d, vs[i].u), checked_mul(c, vs[i].v)), checked_mul(d, u));
      v = std::max(v, ceil_div(rhs, c));
    }
    column_minima.push_back({u, v});
  }
  return MonomialIdeal::normalize(column_minima);
}

bool is_complete(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<LatticePoint> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) sums.push_back(g + h);
  return MonomialIdeal::normalize(sums);
}

MonomialIdeal power(const MonomialIdeal& ideal, Int k) {
  if (k < 0) throw DomainError("negative ideal power");
  auto result = MonomialIdeal::unit();
  for (Int i = 0; i < k; ++i) result = product(result, ideal);
  return result;
}

std::pair<LatticePoint, MonomialIdeal> strip_monomial_factor(const MonomialIdeal& ideal) {
  LatticePoint f = ideal.generators().front();
  for (const auto& g : ideal.generators()) f = {std::min(f.u, g.u), std::min(f.v, g.v)};
  std::vector<LatticePoint> shifted;
  shifted.reserve(ideal.size());
  for (const auto& g : ideal.generators()) shifted.push_back(g - f);
  auto rest = MonomialIdeal::normalize(shifted);
  if (!rest.is_unit() && !is_m_primary(rest))
    throw NotPrimaryError("ideal divided by its monomial factor x^" + std::to_string(f.u) + " y^" +
                          std::to_string(f.v) + " is still not m-primary");
  return {f, std::move(rest)};
}

MonomialIdeal require_complete(const MonomialIdeal& ideal, CompletenessPolicy policy, Warnings* warnings) {
  if (!is_m_primary(ideal)) throw NotPrimaryError("ideal is not m-primary");
  auto closed = integral_closure(ideal);
  if (closed == ideal) return closed;
  if (policy == CompletenessPolicy::strict)
    throw NotCompleteError("ideal is not complete (integrally closed); pass the autoclose policy to use its closure");
  if (warnings) warnings->push_back("input not complete; closed");
  return closed;
}

LatticePolygon hull_polygon(const NewtonBoundary& boundary) {
  auto pts = boundary.vertices();
  pts.push_back({boundary.a(), boundary.b()});
  return LatticePolygon(pts);
}

LatticePolygon bounding_rectangle(const NewtonBoundary& boundary) {
  return LatticePolygon({{0, 0}, {boundary.a(), 0}, {boundary.a(), boundary.b()}, {0, boundary.b()}});
}

LatticePolygon under_polygon(const NewtonBoundary& boundary) {
  auto pts = boundary.vertices();
  pts.push_back({0, 0});
  return LatticePolygon(pts);
}

}  // namespace cmi
