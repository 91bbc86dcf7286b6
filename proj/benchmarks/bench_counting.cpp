#include <benchmark/benchmark.h>

#include "ekrw/counting.hpp"

using namespace ekrw;

static void BM_binomial_small(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binomial(200, 77));
}
BENCHMARK(BM_binomial_small);

static void BM_binomial_large(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binomial(1000000, 200000));
}
BENCHMARK(BM_binomial_large);

static void BM_count_m_family(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(count_m(120, 77, 4, state.range(0)));
}
BENCHMARK(BM_count_m_family)->Arg(3)->Arg(12)->Arg(25);

static void BM_extremal_report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extremal_report(120, 77, 4));
}
BENCHMARK(BM_extremal_report);

static void BM_mu_p(benchmark::State& state) {
  SetFamily fam = [] {
    std::vector<ElementSet> members;
    for (std::uint64_t mask = 1; mask < (1u << 14); mask += 3)
      members.push_back(ElementSet::from_words(14, mask));
    return SetFamily::from_members(14, std::nullopt, std::move(members));
  }();
  Rational p(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mu_p(fam, p));
}
BENCHMARK(BM_mu_p);
