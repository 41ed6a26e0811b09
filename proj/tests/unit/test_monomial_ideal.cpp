#include <gtest/gtest.h>

#include "cmi/monomial_ideal.hpp"

namespace cmi {
namespace {

using Gens = std::vector<LatticePoint>;

MonomialIdeal ideal(std::initializer_list<LatticePoint> g) { return MonomialIdeal::normalize(g); }

const auto kMax = MonomialIdeal::maximal();
const auto kI = ideal({{3, 0}, {1, 1}, {0, 3}});

// Closure oracle for small ideals: every (u, v) in the box that lies on or
// above a segment between two generators, reduced to minimal elements.
MonomialIdeal closure_by_enumeration(const MonomialIdeal& i) {
  const auto& g = i.generators();
  const Int a = g.back().u;
  const Int b = g.front().v;
  Gens members;
  for (Int u = 0; u <= a; ++u)
    for (Int v = 0; v <= b; ++v) {
      bool in = i.contains({u, v});
      for (std::size_t s = 0; s < g.size() && !in; ++s)
        for (std::size_t t = s + 1; t < g.size() && !in; ++t) {
          // (u,v) dominates a point of segment g[s] g[t] (g[s].u < g[t].u)
          const auto& p = g[s];
          const auto& q = g[t];
          if (u < p.u || v < q.v) continue;
          in = (p.v - v) * (q.u - p.u) <= (u - p.u) * (p.v - q.v);
        }
      if (in) members.push_back({u, v});
    }
  return MonomialIdeal::normalize(members);
}

TEST(Normalize, WorkedExamples) {
  EXPECT_EQ(ideal({{1, 0}, {0, 1}, {1, 1}}).generators(), (Gens{{0, 1}, {1, 0}}));
  EXPECT_EQ(ideal({{2, 0}, {0, 3}, {1, 2}}).generators(), (Gens{{0, 3}, {1, 2}, {2, 0}}));
  EXPECT_EQ(ideal({{3, 0}, {1, 1}, {2, 2}, {0, 3}}).generators(), (Gens{{0, 3}, {1, 1}, {3, 0}}));
}

TEST(Normalize, IdempotentAndOrderInsensitive) {
  const Gens raw{{4, 1}, {0, 5}, {2, 2}, {3, 3}, {2, 2}, {6, 0}, {1, 4}};
  auto shuffled = raw;
  std::reverse(shuffled.begin(), shuffled.end());
  const auto a = MonomialIdeal::normalize(raw);
  EXPECT_EQ(a, MonomialIdeal::normalize(shuffled));
  EXPECT_EQ(a, MonomialIdeal::normalize(a.generators()));
}

TEST(Normalize, Errors) {
  EXPECT_THROW(MonomialIdeal::normalize(Gens{}), DomainError);
  EXPECT_THROW(ideal({{1, -1}}), DomainError);
}

TEST(IsMPrimary, WorkedExamples) {
  EXPECT_TRUE(is_m_primary(kMax));
  EXPECT_FALSE(is_m_primary(ideal({{1, 1}})));
  EXPECT_TRUE(is_m_primary(kI));
  EXPECT_FALSE(is_m_primary(MonomialIdeal::unit()));
  EXPECT_FALSE(is_m_primary(ideal({{2, 0}, {1, 1}})));
}

TEST(NewtonBoundary, WorkedExamples) {
  EXPECT_EQ(newton_boundary(kMax).vertices(), (Gens{{0, 1}, {1, 0}}));
  EXPECT_EQ(newton_boundary(kI).vertices(), (Gens{{0, 3}, {1, 1}, {3, 0}}));
  EXPECT_EQ(newton_boundary(ideal({{2, 0}, {1, 1}, {0, 2}})).vertices(), (Gens{{0, 2}, {2, 0}}));
}

TEST(NewtonBoundary, Accessors) {
  const auto b = newton_boundary(kI);
  EXPECT_EQ(b.a(), 3);
  EXPECT_EQ(b.b(), 3);
  EXPECT_EQ(b.lattice_count(), 3);
  EXPECT_EQ(newton_boundary(ideal({{4, 0}, {0, 4}})).lattice_count(), 5);
}

TEST(NewtonBoundary, RejectsNonPrimaryAndBadChains) {
  EXPECT_THROW(newton_boundary(ideal({{1, 1}})), NotPrimaryError);
  EXPECT_THROW(NewtonBoundary(Gens{{0, 2}, {1, 1}, {2, 0}}), DomainError);  // collinear
  EXPECT_THROW(NewtonBoundary(Gens{{0, 2}, {2, 1}, {3, 0}}), DomainError);  // concave
  EXPECT_THROW(NewtonBoundary(Gens{{1, 2}, {3, 0}}), DomainError);
}

TEST(IntegralClosure, WorkedExamples) {
  const auto c23 = integral_closure(ideal({{2, 0}, {0, 3}}));
  EXPECT_EQ(c23.generators(), (Gens{{0, 3}, {1, 2}, {2, 0}}));
  EXPECT_EQ(c23, closure_by_enumeration(ideal({{2, 0}, {0, 3}})));

  EXPECT_EQ(integral_closure(kMax), kMax);

  const auto c44 = integral_closure(ideal({{4, 0}, {0, 4}}));
  EXPECT_EQ(c44.generators(), (Gens{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}));
}

TEST(IntegralClosure, AgreesWithEnumerationOnSmallIdeals) {
  const std::vector<MonomialIdeal> cases{
      ideal({{5, 0}, {0, 7}}),         ideal({{7, 0}, {2, 2}, {0, 9}}), ideal({{6, 0}, {3, 1}, {1, 4}, {0, 8}}),
      ideal({{9, 0}, {4, 1}, {0, 3}}), ideal({{3, 0}, {0, 11}}),
  };
  for (const auto& i : cases) {
    const auto closed = integral_closure(i);
    EXPECT_EQ(closed, closure_by_enumeration(i));
    EXPECT_EQ(integral_closure(closed), closed);
    EXPECT_EQ(newton_boundary(closed), newton_boundary(i));
  }
}

TEST(IsComplete, WorkedExamples) {
  EXPECT_FALSE(is_complete(ideal({{2, 0}, {0, 3}})));
  EXPECT_TRUE(is_complete(kMax));
  EXPECT_TRUE(is_complete(kI));
  EXPECT_THROW(is_complete(ideal({{1, 1}})), NotPrimaryError);
}

TEST(Product, WorkedExamples) {
  EXPECT_EQ(product(kI, MonomialIdeal::unit()), kI);
  EXPECT_EQ(product(ideal({{1, 0}, {0, 2}}), ideal({{2, 0}, {0, 1}})).generators(), (Gens{{0, 3}, {1, 1}, {3, 0}}));
  EXPECT_EQ(product(kMax, kMax).generators(), (Gens{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(Power, IteratedProduct) {
  EXPECT_EQ(power(kMax, 0), MonomialIdeal::unit());
  EXPECT_EQ(power(kMax, 3).size(), 4u);
  EXPECT_EQ(power(kI, 2), product(kI, kI));
  EXPECT_THROW(power(kI, -1), DomainError);
}

TEST(StripMonomialFactor, WorkedExamples) {
  {
    const auto [f, rest] = strip_monomial_factor(ideal({{2, 1}}));
    EXPECT_EQ(f, (LatticePoint{2, 1}));
    EXPECT_TRUE(rest.is_unit());
  }
  {
    const auto [f, rest] = strip_monomial_factor(ideal({{3, 1}, {1, 2}}));
    EXPECT_EQ(f, (LatticePoint{1, 1}));
    EXPECT_EQ(rest.generators(), (Gens{{0, 1}, {2, 0}}));
    EXPECT_EQ(product(ideal({f}), rest), ideal({{3, 1}, {1, 2}}));
  }
  {
    const auto [f, rest] = strip_monomial_factor(kMax);
    EXPECT_EQ(f, (LatticePoint{0, 0}));
    EXPECT_EQ(rest, kMax);
  }
}

TEST(RequireComplete, Policies) {
  const auto incomplete = ideal({{2, 0}, {0, 3}});
  EXPECT_THROW(require_complete(incomplete, CompletenessPolicy::strict), NotCompleteError);
  Warnings w;
  EXPECT_EQ(require_complete(incomplete, CompletenessPolicy::autoclose, &w), integral_closure(incomplete));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.front(), "input not complete; closed");

  Warnings none;
  EXPECT_EQ(require_complete(kI, CompletenessPolicy::autoclose, &none), kI);
  EXPECT_TRUE(none.empty());
  EXPECT_THROW(require_complete(MonomialIdeal::unit(), CompletenessPolicy::autoclose), NotPrimaryError);
}

TEST(Polygons, HullAndRectangle) {
  const auto b = newton_boundary(kI);
  EXPECT_EQ(hull_polygon(b), (LatticePolygon{{0, 3}, {1, 1}, {3, 0}, {3, 3}}));
  EXPECT_TRUE(hull_polygon(b).is_convex());
  EXPECT_EQ(doubled_area(bounding_rectangle(b)).value, 18);
  EXPECT_EQ(doubled_area(under_polygon(b)).value, 6);
}

}  // namespace
}  // namespace cmi
