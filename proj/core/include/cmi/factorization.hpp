#pragma once

// Zariski factorization of complete m-primary monomial ideals into block
// ideals, read directly off the Newton boundary.

#include <span>
#include <vector>

#include "cmi/monomial_ideal.hpp"

namespace cmi {

/// closure(x^p, y^q) with gcd(p, q) = 1. Its boundary is the primitive
/// segment from (0, q) to (p, 0).
class BlockIdeal {
public:
  BlockIdeal(Int p, Int q);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  friend bool operator==(const BlockIdeal&, const BlockIdeal&) = default;

private:
  Int p_;
  Int q_;
};

struct BlockFactor {
  BlockIdeal block;
  Int multiplicity;

  friend bool operator==(const BlockFactor&, const BlockFactor&) = default;
};

/// Blocks with multiplicities, slopes q/p strictly decreasing.
class BlockFactorization {
public:
  explicit BlockFactorization(std::vector<BlockFactor> factors);

  const std::vector<BlockFactor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Number of block ideals counted with multiplicity.
  Int total_multiplicity() const;

  friend bool operator==(const BlockFactorization&, const BlockFactorization&) = default;

private:
  std::vector<BlockFactor> factors_;
};

/// I = closure(x^c1, y^d1) * ... * closure(x^cr, y^dr). Entries are kept in
/// nonincreasing order of d/c; equal slopes and non-primitive (c, d) are
/// allowed.
class CIFactorization {
public:
  explicit CIFactorization(std::vector<EdgeData> factors);

  const std::vector<EdgeData>& factors() const noexcept { return factors_; }

  friend bool operator==(const CIFactorization&, const CIFactorization&) = default;

private:
  std::vector<EdgeData> factors_;
};

/// True when d1/c1 > d2/c2, by cross-multiplication.
bool steeper(EdgeData a, EdgeData b);

std::vector<EdgeData> edges(const NewtonBoundary& boundary);

BlockFactorization zariski_factor(const MonomialIdeal& ideal,
                                  CompletenessPolicy policy = CompletenessPolicy::strict,
                                  Warnings* warnings = nullptr);

/// Merges equal slopes and splits each (c, d) into gcd(c, d) copies of its
/// primitive block.
BlockFactorization to_blocks(const CIFactorization& ci);

/// Each block factor (p, q)^n becomes the single entry (n p, n q).
CIFactorization to_ci(const BlockFactorization& blocks);

/// The factorization of a product: slope-merged union with multiplicities
/// added on equal blocks.
BlockFactorization merge(const BlockFactorization& a, const BlockFactorization& b);

MonomialIdeal block_closure(const BlockIdeal& block);

MonomialIdeal compose(const BlockFactorization& factors);
MonomialIdeal compose(const CIFactorization& factors);

/// l_I = sum gcd(c_i, d_i) + 1.
Int boundary_count(const CIFactorization& factors);

/// l of a product of r complete ideals from the factors' counts:
/// sum l_i - r + 1. Each count must be at least 2.
Int product_boundary_count(std::span<const Int> counts);

}  // namespace cmi
