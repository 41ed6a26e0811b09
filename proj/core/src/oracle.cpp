#include "cmi/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace cmi::oracle {

namespace {

bool primary(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  return !ideal.is_unit() && g.front().u == 0 && g.back().v == 0;
}

Int orient(LatticePoint o, LatticePoint a, LatticePoint b) {
  return checked_sub(checked_mul(a.u - o.u, b.v - o.v), checked_mul(a.v - o.v, b.u - o.u));
}

}  // namespace

std::vector<HalfPlane> supporting_half_planes(const MonomialIdeal& ideal) {
  if (!primary(ideal)) throw NotPrimaryError("oracle: ideal is not m-primary");
  const auto& gens = ideal.generators();
  std::vector<HalfPlane> planes;
  LatticePoint current = gens.front();
  while (current.v > 0) {
    // Next hull vertex: the generator to the right seen at the steepest
    // downward angle from the current one, farthest on ties.
    const LatticePoint* best = nullptr;
    for (const auto& g : gens) {
      if (g.u <= current.u) continue;
      if (!best) {
        best = &g;
        continue;
      }
      const Int turn = orient(current, *best, g);
      if (turn < 0 || (turn == 0 && g.u > best->u)) best = &g;
    }
    const Int c = best->u - current.u;
    const Int d = current.v - best->v;
    planes.push_back({{d, c}, checked_add(checked_mul(d, current.u), checked_mul(c, current.v))});
    current = *best;
  }
  return planes;
}

bool in_newton_region(const std::vector<HalfPlane>& planes, LatticePoint p) {
  if (p.u < 0 || p.v < 0) return false;
  return std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
    return checked_add(checked_mul(h.normal.u, p.u), checked_mul(h.normal.v, p.v)) >= h.offset;
  });
}

Int brute_colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  const auto planes = supporting_half_planes(ideal);
  const Int a = ideal.generators().back().u;
  const Int b = ideal.generators().front().v;
  Int outside = 0;
  for (Int u = 0; u < a; ++u)
    for (Int v = 0; v < b; ++v)
      if (!in_newton_region(planes, {u, v})) ++outside;
  return outside;
}

ColengthTable::ColengthTable(Int max_m, Int max_n) : max_m_(max_m), max_n_(max_n) {
  if (max_m < 0 || max_n < 0) throw DomainError("table bounds must be nonnegative");
  values_.assign(static_cast<std::size_t>((max_m + 1) * (max_n + 1)), 0);
}

std::size_t ColengthTable::index(Int m, Int n) const {
  if (m < 0 || n < 0 || m > max_m_ || n > max_n_) throw DomainError("table index out of range");
  return static_cast<std::size_t>(m * (max_n_ + 1) + n);
}

Int ColengthTable::at(Int m, Int n) const { return values_[index(m, n)]; }

void ColengthTable::set(Int m, Int n, Int value) { values_[index(m, n)] = value; }

std::string ColengthTable::to_text() const {
  std::size_t width = 3;
  for (Int v : values_) width = std::max(width, std::to_string(v).size() + 1);
  auto cell = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  std::ostringstream out;
  out << cell("m\\n");
  for (Int n = 0; n <= max_n_; ++n) out << cell(std::to_string(n));
  out << '\n';
  for (Int m = 0; m <= max_m_; ++m) {
    out << cell(std::to_string(m));
    for (Int n = 0; n <= max_n_; ++n) out << cell(std::to_string(at(m, n)));
    out << '\n';
  }
  return out.str();
}

ColengthTable brute_table(const MonomialIdeal& i, const MonomialIdeal& j, Int max_m, Int max_n) {
  if (!primary(i) || !primary(j)) throw NotPrimaryError("oracle: both ideals must be m-primary");
  ColengthTable table(max_m, max_n);
  std::vector<MonomialIdeal> i_powers{MonomialIdeal::unit()};
  for (Int m = 1; m <= max_m; ++m) i_powers.push_back(product(i_powers.back(), i));
  std::vector<MonomialIdeal> j_powers{MonomialIdeal::unit()};
  for (Int n = 1; n <= max_n; ++n) j_powers.push_back(product(j_powers.back(), j));
  for (Int m = 0; m <= max_m; ++m)
    for (Int n = 0; n <= max_n; ++n)
      table.set(m, n,
                brute_colength(product(i_powers[static_cast<std::size_t>(m)], j_powers[static_cast<std::size_t>(n)])));
  return table;
}

Int brute_monomial_count_between(const MonomialIdeal& big, const MonomialIdeal& small) {
  if (!big.is_unit()) {
    const auto planes = supporting_half_planes(big);
    for (const auto& g : small.generators())
      if (!in_newton_region(planes, g))
        throw DomainError("oracle: the smaller ideal is not contained in the closure of the larger one");
  }
  return checked_sub(brute_colength(small), brute_colength(big));
}

}  // namespace cmi::oracle
