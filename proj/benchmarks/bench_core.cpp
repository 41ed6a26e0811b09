#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cmi/bhattacharya.hpp"
#include "cmi/corpus.hpp"
#include "cmi/oracle.hpp"

namespace {

using namespace cmi;

std::vector<MonomialIdeal> sample(Int max_exponent, int count) {
  std::mt19937_64 rng(7);
  std::vector<MonomialIdeal> out;
  for (int k = 0; k < count; ++k) out.push_back(random_complete_ideal(rng, max_exponent, max_exponent, 8));
  return out;
}

// Raw generators: pure powers plus scattered points, mostly not complete.
std::vector<MonomialIdeal> raw_sample(Int max_exponent, int count) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Int> coord(1, max_exponent);
  std::vector<MonomialIdeal> out;
  for (int k = 0; k < count; ++k) {
    std::vector<LatticePoint> g{{coord(rng), 0}, {0, coord(rng)}};
    for (int e = 0; e < 6; ++e) g.push_back({coord(rng), coord(rng)});
    out.push_back(MonomialIdeal::normalize(g));
  }
  return out;
}

void BM_IntegralClosure(benchmark::State& state) {
  const auto ideals = raw_sample(state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(ideals[k++ % ideals.size()]));
}
BENCHMARK(BM_IntegralClosure)->Arg(20)->Arg(200)->Arg(2000);

void BM_ZariskiFactor(benchmark::State& state) {
  const auto ideals = sample(state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(zariski_factor(ideals[k++ % ideals.size()]));
}
BENCHMARK(BM_ZariskiFactor)->Arg(20)->Arg(200);

void BM_BhattacharyaPolynomial(benchmark::State& state) {
  const auto ideals = sample(state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = ideals[k % ideals.size()];
    const auto& j = ideals[(k + 1) % ideals.size()];
    ++k;
    benchmark::DoNotOptimize(bhattacharya_polynomial(i, j));
  }
}
BENCHMARK(BM_BhattacharyaPolynomial)->Arg(20)->Arg(200);

void BM_WithMaximalIdeal(benchmark::State& state) {
  const auto ideals = sample(state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(with_maximal_ideal(ideals[k++ % ideals.size()]));
}
BENCHMARK(BM_WithMaximalIdeal)->Arg(20)->Arg(200);

void BM_BruteTable(benchmark::State& state) {
  const auto ideals = sample(20, 8);
  const Int grid = state.range(0);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = ideals[k % ideals.size()];
    const auto& j = ideals[(k + 1) % ideals.size()];
    ++k;
    benchmark::DoNotOptimize(oracle::brute_table(i, j, grid, grid));
  }
}
BENCHMARK(BM_BruteTable)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
