#include "cmi/bhattacharya.hpp"

#include <array>
#include <utility>

namespace cmi {

namespace {

// Applies the completeness policy and tags any autoclose warning with the
// ideal's role when an operation takes two ideals.
MonomialIdeal prepare(const MonomialIdeal& ideal, const char* label, CompletenessPolicy policy,
                      Warnings* warnings) {
  Warnings local;
  auto complete = require_complete(ideal, policy, warnings ? &local : nullptr);
  if (warnings)
    for (auto& w : local) warnings->push_back(label ? std::string(label) + ": " + w : w);
  return complete;
}

HalfInteger half_of(Int doubled) { return HalfInteger::from_doubled(doubled); }

// a + b - l + 1, the doubled linear coefficient of the colength formula.
Int doubled_linear_term(const NewtonBoundary& boundary) {
  return checked_add(checked_sub(checked_add(boundary.a(), boundary.b()), boundary.lattice_count()), 1);
}

Int require_nonnegative(Int k, const char* what) {
  if (k < 0) throw DomainError(std::string(what) + " must be nonnegative");
  return k;
}

}  // namespace

Int HalfInteger::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + to_string());
  return doubled_ / 2;
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

Int BhattacharyaPolynomial::evaluate(Int m, Int n) const {
  Int acc = 0;
  acc = checked_add(acc, checked_mul(qm.doubled(), checked_mul(m, m)));
  acc = checked_add(acc, checked_mul(qn.doubled(), checked_mul(n, n)));
  acc = checked_add(acc, checked_mul(cross.doubled(), checked_mul(m, n)));
  acc = checked_add(acc, checked_mul(lm.doubled(), m));
  acc = checked_add(acc, checked_mul(ln.doubled(), n));
  if (acc % 2 != 0)
    throw ConsistencyError("Bhattacharya polynomial " + to_string() + " is not integral at (" + std::to_string(m) +
                           ", " + std::to_string(n) + ")");
  return acc / 2;
}

std::string BhattacharyaPolynomial::to_string() const {
  const std::array<std::pair<HalfInteger, const char*>, 5> terms{
      {{qm, "m^2"}, {qn, "n^2"}, {cross, "mn"}, {lm, "m"}, {ln, "n"}}};
  std::string out;
  for (const auto& [coef, monomial] : terms) {
    if (coef.doubled() == 0) continue;
    const bool negative = coef.doubled() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const auto magnitude = HalfInteger::from_doubled(checked_abs(coef.doubled()));
    if (magnitude.doubled() != 2) out += magnitude.to_string();
    out += monomial;
  }
  return out.empty() ? "0" : out;
}

HalfInteger s_value(const CIFactorization& factors) {
  const auto& fs = factors.factors();
  Int doubled = 0;
  Int run = 0;  // c_1 + ... + c_{j-1}
  for (const auto& e : fs) {
    doubled = checked_add(doubled, checked_mul(e.c, e.d));
    doubled = checked_add(doubled, checked_mul(2, checked_mul(run, e.d)));
    run = checked_add(run, e.c);
  }
  return half_of(doubled);
}

HalfInteger s_value(const MonomialIdeal& ideal, CompletenessPolicy policy, Warnings* warnings) {
  const auto complete = prepare(ideal, nullptr, policy, warnings);
  const auto boundary = newton_boundary(complete);
  const Int geometric = checked_sub(doubled_area(bounding_rectangle(boundary)).value,
                                    doubled_area(hull_polygon(boundary)).value);
  const auto from_edges = s_value(CIFactorization(edges(boundary)));
  if (geometric != from_edges.doubled())
    throw ConsistencyError("s_I disagreement: rectangle minus hull gives " + half_of(geometric).to_string() +
                           ", edge formula gives " + from_edges.to_string());
  return from_edges;
}

Int colength(const BlockFactorization& factors) {
  const auto& fs = factors.factors();
  Int doubled = 0;
  Int run = 0;  // sum of p_i n_i over earlier blocks
  for (const auto& f : fs) {
    const Int p = f.block.p();
    const Int q = f.block.q();
    const Int n = f.multiplicity;
    doubled = checked_add(doubled, checked_mul(checked_mul(p, q), checked_mul(n, n)));
    doubled = checked_add(doubled, checked_mul(2, checked_mul(run, checked_mul(q, n))));
    doubled = checked_add(doubled, checked_mul(checked_sub(checked_add(p, q), 1), n));
    run = checked_add(run, checked_mul(p, n));
  }
  return half_of(doubled).to_integer();
}

Int colength(const MonomialIdeal& ideal, CompletenessPolicy policy, Warnings* warnings) {
  const auto complete = prepare(ideal, nullptr, policy, warnings);
  const auto boundary = newton_boundary(complete);
  const auto s = s_value(complete);
  const Int from_vertices = half_of(checked_add(s.doubled(), doubled_linear_term(boundary))).to_integer();
  const Int from_blocks = colength(zariski_factor(complete));
  if (from_vertices != from_blocks)
    throw ConsistencyError("colength disagreement: vertex formula gives " + std::to_string(from_vertices) +
                           ", block formula gives " + std::to_string(from_blocks));
  return from_vertices;
}

BhattacharyaPolynomial bhattacharya_polynomial(const MonomialIdeal& i, const MonomialIdeal& j,
                                               CompletenessPolicy policy, Warnings* warnings) {
  const auto ci = prepare(i, "I", policy, warnings);
  const auto cj = prepare(j, "J", policy, warnings);
  const auto ij = product(ci, cj);
  if (!is_complete(ij)) throw ConsistencyError("product of complete ideals came out incomplete");

  const auto si = s_value(ci);
  const auto sj = s_value(cj);
  const auto sij = s_value(ij);
  return {si, sj, sij - si - sj, half_of(doubled_linear_term(newton_boundary(ci))),
          half_of(doubled_linear_term(newton_boundary(cj)))};
}

MixedMultiplicities mixed_multiplicities(const MonomialIdeal& i, const MonomialIdeal& j, CompletenessPolicy policy,
                                         Warnings* warnings) {
  const auto p = bhattacharya_polynomial(i, j, policy, warnings);
  return {p.qm.doubled(), p.cross.to_integer(), p.qn.doubled()};
}

BhattacharyaPolynomial verma_polynomial(const MonomialIdeal& i, const MonomialIdeal& j, CompletenessPolicy policy,
                                        Warnings* warnings) {
  const auto ci = prepare(i, "I", policy, warnings);
  const auto cj = prepare(j, "J", policy, warnings);
  const Int ei = s_value(ci).doubled();  // e(I) = 2 s_I
  const Int ej = s_value(cj).doubled();
  const Int li = colength(ci);
  const Int lj = colength(cj);
  const Int lij = colength(product(ci, cj));
  // e C(m,2) = (e/2) m^2 - (e/2) m
  return {half_of(ei), half_of(ej), HalfInteger::from_integer(checked_sub(checked_sub(lij, li), lj)),
          HalfInteger::from_integer(li) - half_of(ei), HalfInteger::from_integer(lj) - half_of(ej)};
}

Int maximal_ideal_cross_term(const CIFactorization& factors) {
  Int total = 0;
  for (const auto& e : factors.factors()) total = checked_add(total, e.d >= e.c ? e.c : e.d);
  return total;
}

BhattacharyaPolynomial with_maximal_ideal(const CIFactorization& factors) {
  Int linear = 0;
  for (const auto& e : factors.factors())
    linear = checked_add(linear, checked_sub(checked_add(e.c, e.d), gcd(e.c, e.d)));
  const auto half = half_of(1);
  return {s_value(factors), half, HalfInteger::from_integer(maximal_ideal_cross_term(factors)), half_of(linear), half};
}

BhattacharyaPolynomial with_maximal_ideal(const MonomialIdeal& ideal, CompletenessPolicy policy,
                                          Warnings* warnings) {
  const auto complete = prepare(ideal, nullptr, policy, warnings);
  return with_maximal_ideal(CIFactorization(edges(newton_boundary(complete))));
}

Int hilbert_function(const MonomialIdeal& ideal, Int m, CompletenessPolicy policy, Warnings* warnings) {
  require_nonnegative(m, "power m");
  const auto complete = prepare(ideal, nullptr, policy, warnings);
  const CIFactorization ci(edges(newton_boundary(complete)));
  Int doubled = checked_mul(s_value(ci).doubled(), checked_add(checked_mul(2, m), 1));
  for (const auto& e : ci.factors())
    doubled = checked_add(doubled, checked_sub(checked_add(e.c, e.d), gcd(e.c, e.d)));
  return half_of(doubled).to_integer();
}

Int fiber_function(const MonomialIdeal& ideal, Int m, CompletenessPolicy policy, Warnings* warnings) {
  require_nonnegative(m, "power m");
  const auto complete = prepare(ideal, nullptr, policy, warnings);
  const CIFactorization ci(edges(newton_boundary(complete)));
  return checked_add(checked_mul(maximal_ideal_cross_term(ci), m), 1);
}

Int min_generators(const MonomialIdeal& ideal, CompletenessPolicy policy, Warnings* warnings) {
  return fiber_function(ideal, 1, policy, warnings);
}

Int general_j_step(const MonomialIdeal& i, const MonomialIdeal& j, Int m, Int n, CompletenessPolicy policy,
                   Warnings* warnings) {
  require_nonnegative(m, "power m");
  require_nonnegative(n, "power n");
  const auto ci = prepare(i, "I", policy, warnings);
  const auto [factor, stripped] = strip_monomial_factor(j);
  if (stripped.is_unit()) return hilbert_function(ci, m);
  const auto cj = prepare(stripped, "J", policy, warnings);
  const auto poly = bhattacharya_polynomial(ci, cj);
  return checked_sub(poly.evaluate(checked_add(m, 1), n), poly.evaluate(m, n));
}

}  // namespace cmi
