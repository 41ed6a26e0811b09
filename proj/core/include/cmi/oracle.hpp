#pragma once

// Brute-force lattice-point counting. Nothing here calls the closed-form,
// boundary or factorization code: the only shared pieces are LatticePoint,
// MonomialIdeal as a generator container, and the generator sumset
// (cmi::product). The Newton polyhedron is rebuilt here by gift wrapping.

#include <string>
#include <vector>

#include "cmi/monomial_ideal.hpp"

namespace cmi::oracle {

/// Supporting half-planes of N(I), one per compact edge:
/// normal.u * x + normal.v * y >= offset.
struct HalfPlane {
  LatticePoint normal;
  Int offset = 0;
};

/// Gift-wrapped compact edges of N(I). Throws NotPrimaryError.
std::vector<HalfPlane> supporting_half_planes(const MonomialIdeal& ideal);

/// Membership of a lattice point in N(I) by the half-plane conjunction.
bool in_newton_region(const std::vector<HalfPlane>& planes, LatticePoint p);

/// Lattice points of the complement of N(I) in the first quadrant; for a
/// complete ideal this is l(R/I). The unit ideal gives 0.
Int brute_colength(const MonomialIdeal& ideal);

/// l(R / I^m J^n) for 0 <= m <= max_m, 0 <= n <= max_n.
class ColengthTable {
public:
  ColengthTable(Int max_m, Int max_n);

  Int max_m() const noexcept { return max_m_; }
  Int max_n() const noexcept { return max_n_; }
  Int at(Int m, Int n) const;
  void set(Int m, Int n, Int value);

  /// Rows m = 0..max_m, columns n = 0..max_n, right-aligned.
  std::string to_text() const;

private:
  std::size_t index(Int m, Int n) const;
  Int max_m_;
  Int max_n_;
  std::vector<Int> values_;
};

ColengthTable brute_table(const MonomialIdeal& i, const MonomialIdeal& j, Int max_m, Int max_n);

/// l(big / small) = brute_colength(small) - brute_colength(big). Requires
/// every generator of `small` to lie in N(big).
Int brute_monomial_count_between(const MonomialIdeal& big, const MonomialIdeal& small);

}  // namespace cmi::oracle
