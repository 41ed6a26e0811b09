#include <gtest/gtest.h>

#include <random>

#include "cmi/corpus.hpp"
#include "cmi/oracle.hpp"

namespace cmi {
namespace {

MonomialIdeal ideal(std::initializer_list<LatticePoint> g) { return MonomialIdeal::normalize(g); }

const auto kMax = MonomialIdeal::maximal();
const auto kI = ideal({{3, 0}, {1, 1}, {0, 3}});

TEST(BruteColength, WorkedExamples) {
  EXPECT_EQ(oracle::brute_colength(kMax), 1);
  EXPECT_EQ(oracle::brute_colength(ideal({{2, 0}, {1, 2}, {0, 3}})), 5);
  EXPECT_EQ(oracle::brute_colength(kI), 5);
}

TEST(BruteColength, IncompleteCountsTheClosure) {
  // (x^2, y^3) misses x y^2, which its closure contains.
  EXPECT_EQ(oracle::brute_colength(ideal({{2, 0}, {0, 3}})), 5);
}

TEST(BruteColength, Errors) {
  EXPECT_THROW(oracle::brute_colength(ideal({{1, 1}})), NotPrimaryError);
  EXPECT_EQ(oracle::brute_colength(MonomialIdeal::unit()), 0);
}

TEST(BruteTable, MaximalIdealIsTriangular) {
  const auto t = oracle::brute_table(kMax, kMax, 3, 3);
  for (Int m = 0; m <= 3; ++m)
    for (Int n = 0; n <= 3; ++n) EXPECT_EQ(t.at(m, n), (m + n) * (m + n + 1) / 2);
}

TEST(BruteTable, WorkedExamples) {
  const auto t = oracle::brute_table(kI, kMax, 1, 1);
  EXPECT_EQ(t.at(1, 1), 8);
  EXPECT_EQ(t.at(1, 0), oracle::brute_colength(kI));
  EXPECT_EQ(t.at(0, 0), 0);
}

TEST(BruteTable, Text) {
  const auto t = oracle::brute_table(kMax, kMax, 1, 2);
  EXPECT_EQ(t.to_text(), "m\\n  0  1  2\n  0  0  1  3\n  1  1  3  6\n");
}

TEST(BruteMonomialCountBetween, WorkedExamples) {
  EXPECT_EQ(oracle::brute_monomial_count_between(kI, kI), 0);
  EXPECT_EQ(oracle::brute_monomial_count_between(kMax, product(kMax, kMax)), 2);
  EXPECT_EQ(oracle::brute_monomial_count_between(kI, product(kI, kMax)), 3);
  EXPECT_THROW(oracle::brute_monomial_count_between(product(kMax, kMax), kMax), DomainError);
}

TEST(Oracle, MembershipAgreesWithStaircase) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto i = random_complete_ideal(rng, 15, 15);
    const auto planes = oracle::supporting_half_planes(i);
    const auto& g = i.generators();
    for (Int u = 0; u <= g.back().u + 1; ++u)
      for (Int v = 0; v <= g.front().v + 1; ++v)
        ASSERT_EQ(oracle::in_newton_region(planes, {u, v}), i.contains({u, v})) << u << "," << v;
  }
}

TEST(Oracle, TableIsMonotone) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto i = random_complete_ideal(rng, 8, 8);
    const auto j = random_complete_ideal(rng, 8, 8);
    const auto t = oracle::brute_table(i, j, 3, 3);
    for (Int m = 0; m <= 3; ++m)
      for (Int n = 0; n <= 3; ++n) {
        if (m < 3) {
          EXPECT_LT(t.at(m, n), t.at(m + 1, n));
        }
        if (n < 3) {
          EXPECT_LT(t.at(m, n), t.at(m, n + 1));
        }
      }
  }
}

}  // namespace
}  // namespace cmi
