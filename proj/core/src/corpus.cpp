#include "cmi/corpus.hpp"

#include <algorithm>

namespace cmi {

namespace {

Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

}  // namespace

MonomialIdeal random_complete_ideal(std::mt19937_64& rng, Int max_a, Int max_b, int extra) {
  if (max_a < 1 || max_b < 1) throw DomainError("corpus bounds must be positive");
  const Int a = uniform(rng, 1, max_a);
  const Int b = uniform(rng, 1, max_b);
  std::vector<LatticePoint> gens{{a, 0}, {0, b}};
  const int count = static_cast<int>(uniform(rng, 0, extra));
  for (int k = 0; k < count && a > 1 && b > 1; ++k) gens.push_back({uniform(rng, 1, a - 1), uniform(rng, 1, b - 1)});
  return integral_closure(MonomialIdeal::normalize(gens));
}

CIFactorization random_ci_factorization(std::mt19937_64& rng, Int max_a, Int max_b, int max_factors) {
  if (max_a < 1 || max_b < 1 || max_factors < 1) throw DomainError("corpus bounds must be positive");
  const auto count = static_cast<int>(uniform(rng, 1, std::min<Int>({max_factors, max_a, max_b})));
  Int room_a = max_a - count;
  Int room_b = max_b - count;
  std::vector<EdgeData> factors;
  for (int k = 0; k < count; ++k) {
    const Int c = 1 + uniform(rng, 0, room_a / 2);
    const Int d = 1 + uniform(rng, 0, room_b / 2);
    room_a -= c - 1;
    room_b -= d - 1;
    factors.push_back({c, d});
  }
  return CIFactorization(std::move(factors));
}

}  // namespace cmi
