#pragma once

// Closed forms for colengths and for the Bhattacharya function
// l(R / I^m J^n) of complete m-primary monomial ideals in two variables.
//
// Every quantity with a possible 1/2 is a HalfInteger; results that must be
// integers are checked and a ConsistencyError is raised if they are not.
// Operations that need complete input accept a CompletenessPolicy (strict by
// default) and an optional warnings sink for the autoclose case.

#include <string>

#include "cmi/factorization.hpp"
#include "cmi/monomial_ideal.hpp"

namespace cmi {

/// Exact value in (1/2)Z, stored doubled.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_doubled(Int doubled) { return HalfInteger(doubled); }
  static HalfInteger from_integer(Int value) { return HalfInteger(checked_mul(value, 2)); }

  constexpr Int doubled() const noexcept { return doubled_; }
  constexpr bool is_integer() const noexcept { return doubled_ % 2 == 0; }

  /// Throws ConsistencyError when the value has a half.
  Int to_integer() const;

  /// "3", "1/2", "-5/2".
  std::string to_string() const;

  friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return HalfInteger(checked_add(a.doubled_, b.doubled_)); }
  friend HalfInteger operator-(HalfInteger a, HalfInteger b) { return HalfInteger(checked_sub(a.doubled_, b.doubled_)); }
  friend HalfInteger operator*(Int k, HalfInteger a) { return HalfInteger(checked_mul(k, a.doubled_)); }
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

private:
  constexpr explicit HalfInteger(Int doubled) : doubled_(doubled) {}
  Int doubled_ = 0;
};

/// qm m^2 + qn n^2 + cross mn + lm m + ln n. The constant term is always 0.
struct BhattacharyaPolynomial {
  HalfInteger qm;
  HalfInteger qn;
  HalfInteger cross;
  HalfInteger lm;
  HalfInteger ln;

  /// Exact value at (m, n); throws ConsistencyError if it is not an integer.
  Int evaluate(Int m, Int n) const;

  /// Reduced-fraction rendering, e.g. "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n".
  std::string to_string() const;

  friend bool operator==(const BhattacharyaPolynomial&, const BhattacharyaPolynomial&) = default;
};

struct MixedMultiplicities {
  Int e20 = 0;
  Int e11 = 0;
  Int e02 = 0;

  friend bool operator==(const MixedMultiplicities&, const MixedMultiplicities&) = default;
};

/// s_I, twice: area under the Newton boundary. Computed as rectangle minus
/// hull polygon and again from the edge data; the two must agree.
HalfInteger s_value(const MonomialIdeal& ideal, CompletenessPolicy policy = CompletenessPolicy::strict,
                    Warnings* warnings = nullptr);

/// s from a (not necessarily reduced) complete-intersection factorization:
/// sum c_i d_i / 2 + sum_{i<j} c_i d_j.
HalfInteger s_value(const CIFactorization& factors);

/// l(R/I) from the boundary vertices and again from the block
/// factorization; the two must agree.
Int colength(const MonomialIdeal& ideal, CompletenessPolicy policy = CompletenessPolicy::strict,
             Warnings* warnings = nullptr);

/// Block-factorization route alone:
/// sum p q n^2 / 2 + sum_{i<j} p_i q_j n_i n_j + sum (p + q - 1) n / 2.
Int colength(const BlockFactorization& factors);

BhattacharyaPolynomial bhattacharya_polynomial(const MonomialIdeal& i, const MonomialIdeal& j,
                                               CompletenessPolicy policy = CompletenessPolicy::strict,
                                               Warnings* warnings = nullptr);

MixedMultiplicities mixed_multiplicities(const MonomialIdeal& i, const MonomialIdeal& j,
                                         CompletenessPolicy policy = CompletenessPolicy::strict,
                                         Warnings* warnings = nullptr);

/// Same polynomial assembled from e(I), e(J) and the colengths of I, J, IJ:
/// e(I) C(m,2) + e(J) C(n,2) + (l(R/IJ) - l(R/I) - l(R/J)) mn + l(R/I) m + l(R/J) n.
BhattacharyaPolynomial verma_polynomial(const MonomialIdeal& i, const MonomialIdeal& j,
                                        CompletenessPolicy policy = CompletenessPolicy::strict,
                                        Warnings* warnings = nullptr);

/// l(R / I^m m^n) straight from the edge data of I, without forming I * m.
BhattacharyaPolynomial with_maximal_ideal(const MonomialIdeal& ideal,
                                          CompletenessPolicy policy = CompletenessPolicy::strict,
                                          Warnings* warnings = nullptr);
BhattacharyaPolynomial with_maximal_ideal(const CIFactorization& factors);

/// sum_{i<=s} c_i + sum_{j>s} d_j, where s is the last edge with d/c >= 1.
Int maximal_ideal_cross_term(const CIFactorization& factors);

/// l(I^m / I^{m+1}).
Int hilbert_function(const MonomialIdeal& ideal, Int m, CompletenessPolicy policy = CompletenessPolicy::strict,
                     Warnings* warnings = nullptr);

/// l(I^m / m I^m).
Int fiber_function(const MonomialIdeal& ideal, Int m, CompletenessPolicy policy = CompletenessPolicy::strict,
                   Warnings* warnings = nullptr);

/// v(I), the minimal number of generators, from the edge data.
Int min_generators(const MonomialIdeal& ideal, CompletenessPolicy policy = CompletenessPolicy::strict,
                   Warnings* warnings = nullptr);

/// l(I^m J^n / I^{m+1} J^n) for complete J that need not be m-primary:
/// J = f J' and the monomial f drops out.
Int general_j_step(const MonomialIdeal& i, const MonomialIdeal& j, Int m, Int n,
                   CompletenessPolicy policy = CompletenessPolicy::strict, Warnings* warnings = nullptr);

}  // namespace cmi
