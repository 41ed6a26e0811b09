#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmi/lattice_geom.hpp"

namespace cmi {

/// A monomial ideal of k[x, y], stored as its minimal generators: an
/// antichain of exponent vectors sorted by u ascending (so v descending).
/// Always nonempty; the unit ideal is {(0,0)}.
class MonomialIdeal {
public:
  /// Reduces `raw` to the minimal antichain. Throws DomainError on an empty
  /// list or a negative exponent.
  static MonomialIdeal normalize(std::span<const LatticePoint> raw);
  static MonomialIdeal normalize(std::initializer_list<LatticePoint> raw) {
    return normalize(std::span<const LatticePoint>(raw.begin(), raw.size()));
  }

  static MonomialIdeal unit() { return MonomialIdeal({{0, 0}}); }
  static MonomialIdeal maximal() { return MonomialIdeal({{0, 1}, {1, 0}}); }

  const std::vector<LatticePoint>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front() == LatticePoint{0, 0}; }

  /// True when some generator divides the monomial x^p.u y^p.v.
  bool contains(LatticePoint p) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  explicit MonomialIdeal(std::vector<LatticePoint> gens) : gens_(std::move(gens)) {}
  std::vector<LatticePoint> gens_;
};

/// One compact edge of a Newton boundary: run c to the right, drop d down.
struct EdgeData {
  Int c = 0;
  Int d = 0;

  friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

/// Vertex chain of the compact faces of the Newton polyhedron, running from
/// (0, b_I) to (a_I, 0) with u strictly increasing and strictly convex turns.
class NewtonBoundary {
public:
  /// Validates the vertex-chain invariants; throws DomainError otherwise.
  explicit NewtonBoundary(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  Int a() const noexcept { return vertices_.back().u; }
  Int b() const noexcept { return vertices_.front().v; }
  std::size_t edge_count() const noexcept { return vertices_.size() - 1; }

  /// l_I: lattice points on the boundary, counted segment by segment.
  Int lattice_count() const;

  /// Half-plane test against every edge: d*u + c*v >= d*a_i + c*b_i.
  bool above(LatticePoint p) const;

  friend bool operator==(const NewtonBoundary&, const NewtonBoundary&) = default;

private:
  std::vector<LatticePoint> vertices_;
};

enum class CompletenessPolicy { strict, autoclose };

using Warnings = std::vector<std::string>;

/// Unit ideal excluded: it contains 1 and is not m-primary.
bool is_m_primary(const MonomialIdeal& ideal);

/// Lower convex hull of the generators. Throws NotPrimaryError.
NewtonBoundary newton_boundary(const MonomialIdeal& ideal);

/// Minimal generators of the lattice points of N(I).
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

bool is_complete(const MonomialIdeal& ideal);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^k by repeated product, reducing to the antichain at every step.
MonomialIdeal power(const MonomialIdeal& ideal, Int k);

/// Splits J = f * J' with f the componentwise minimum of the generators.
/// J' is m-primary or the unit ideal; anything else is a NotPrimaryError.
std::pair<LatticePoint, MonomialIdeal> strip_monomial_factor(const MonomialIdeal& ideal);

/// Gatekeeper for operations whose results only hold for complete
/// m-primary ideals. Under `autoclose` an incomplete ideal is replaced by its
/// closure and a warning is appended to `warnings` (when given).
MonomialIdeal require_complete(const MonomialIdeal& ideal, CompletenessPolicy policy,
                               Warnings* warnings = nullptr);

/// Convex polygon bounded by the Newton boundary and the two segments to
/// the corner (a_I, b_I).
LatticePolygon hull_polygon(const NewtonBoundary& boundary);

/// Rectangle [0, a_I] x [0, b_I].
LatticePolygon bounding_rectangle(const NewtonBoundary& boundary);

/// Region between the axes and the Newton boundary. Not convex in general.
LatticePolygon under_polygon(const NewtonBoundary& boundary);

}  // namespace cmi
