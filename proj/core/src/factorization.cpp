#include "cmi/factorization.hpp"

#include <algorithm>
#include <cassert>

namespace cmi {

namespace {

EdgeData as_edge(const BlockIdeal& b) { return {b.p(), b.q()}; }

}  // namespace

BlockIdeal::BlockIdeal(Int p, Int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw DomainError("block ideal exponents must be positive");
  if (gcd(p, q) != 1) throw DomainError("block ideal exponents must be coprime");
}

BlockFactorization::BlockFactorization(std::vector<BlockFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("factorization needs at least one block");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].multiplicity < 1) throw DomainError("block multiplicity must be positive");
    if (i > 0 && !steeper(as_edge(factors_[i - 1].block), as_edge(factors_[i].block)))
      throw DomainError("blocks must be listed by strictly decreasing slope q/p");
  }
}

Int BlockFactorization::total_multiplicity() const {
  Int total = 0;
  for (const auto& f : factors_) total = checked_add(total, f.multiplicity);
  return total;
}

CIFactorization::CIFactorization(std::vector<EdgeData> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("factorization needs at least one factor");
  for (const auto& e : factors_)
    if (e.c < 1 || e.d < 1) throw DomainError("complete intersection exponents must be positive");
  std::stable_sort(factors_.begin(), factors_.end(), steeper);
}

bool steeper(EdgeData a, EdgeData b) { return checked_mul(a.d, b.c) > checked_mul(b.d, a.c); }

std::vector<EdgeData> edges(const NewtonBoundary& boundary) {
  const auto& vs = boundary.vertices();
  std::vector<EdgeData> out;
  out.reserve(vs.size() - 1);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) out.push_back({vs[i + 1].u - vs[i].u, vs[i].v - vs[i + 1].v});
  return out;
}

BlockFactorization zariski_factor(const MonomialIdeal& ideal, CompletenessPolicy policy, Warnings* warnings) {
  const auto complete = require_complete(ideal, policy, warnings);
  std::vector<BlockFactor> factors;
  for (const auto& e : edges(newton_boundary(complete))) {
    const Int g = gcd(e.c, e.d);
    factors.push_back({BlockIdeal(e.c / g, e.d / g), g});
  }
  return BlockFactorization(std::move(factors));
}

BlockFactorization to_blocks(const CIFactorization& ci) {
  std::vector<BlockFactor> factors;
  for (const auto& e : ci.factors()) {
    const Int g = gcd(e.c, e.d);
    BlockIdeal block(e.c / g, e.d / g);
    if (!factors.empty() && factors.back().block == block)
      factors.back().multiplicity = checked_add(factors.back().multiplicity, g);
    else
      factors.push_back({block, g});
  }
  return BlockFactorization(std::move(factors));
}

CIFactorization to_ci(const BlockFactorization& blocks) {
  std::vector<EdgeData> out;
  for (const auto& f : blocks.factors())
    out.push_back({checked_mul(f.block.p(), f.multiplicity), checked_mul(f.block.q(), f.multiplicity)});
  return CIFactorization(std::move(out));
}

BlockFactorization merge(const BlockFactorization& a, const BlockFactorization& b) {
  std::vector<BlockFactor> all(a.factors());
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  std::stable_sort(all.begin(), all.end(),
                   [](const BlockFactor& x, const BlockFactor& y) { return steeper(as_edge(x.block), as_edge(y.block)); });
  std::vector<BlockFactor> merged;
  for (const auto& f : all) {
    if (!merged.empty() && merged.back().block == f.block)
      merged.back().multiplicity = checked_add(merged.back().multiplicity, f.multiplicity);
    else
      merged.push_back(f);
  }
  return BlockFactorization(std::move(merged));
}

MonomialIdeal block_closure(const BlockIdeal& block) {
  return integral_closure(MonomialIdeal::normalize({{block.p(), 0}, {0, block.q()}}));
}

MonomialIdeal compose(const BlockFactorization& factors) {
  auto result = MonomialIdeal::unit();
  for (const auto& f : factors.factors()) result = product(result, power(block_closure(f.block), f.multiplicity));
  assert(is_complete(result));
  return result;
}

MonomialIdeal compose(const CIFactorization& factors) {
  auto result = MonomialIdeal::unit();
  for (const auto& e : factors.factors())
    result = product(result, integral_closure(MonomialIdeal::normalize({{e.c, 0}, {0, e.d}})));
  assert(is_complete(result));
  return result;
}

Int boundary_count(const CIFactorization& factors) {
  Int total = 1;
  for (const auto& e : factors.factors()) total = checked_add(total, gcd(e.c, e.d));
  return total;
}

Int product_boundary_count(std::span<const Int> counts) {
  if (counts.empty()) throw DomainError("product boundary count needs at least one factor");
  Int total = 1;
  for (Int l : counts) {
    if (l < 2) throw DomainError("boundary lattice count of an m-primary ideal is at least 2");
    total = checked_add(total, l - 1);
  }
  return total;
}

}  // namespace cmi
