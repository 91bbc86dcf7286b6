#include <benchmark/benchmark.h>

#include "ekrw/canonical.hpp"
#include "ekrw/constructions.hpp"
#include "ekrw/verify.hpp"

using namespace ekrw;

static void BM_dwise_check_m11733(benchmark::State& state) {
  SetFamily fam = build(FamilySpec::m(11, 7, 3, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_d_wise_t_intersecting(fam, 3, 1).ok);
}
BENCHMARK(BM_dwise_check_m11733);

static void BM_dwise_check_naive(benchmark::State& state) {
  SetFamily fam = build(FamilySpec::m(11, 7, 3, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_d_wise_t_intersecting_naive(fam, 3, 1).ok);
}
BENCHMARK(BM_dwise_check_naive);

static void BM_lemma_check(benchmark::State& state) {
  SetFamily fam = build(FamilySpec::a(10, 5, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_m_wise_lemma(fam, 3, 1).ok);
}
BENCHMARK(BM_lemma_check);

static void BM_canonical_form_structured(benchmark::State& state) {
  SetFamily fam = build(FamilySpec::h(12, 6, 2));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(fam).canonical.size());
}
BENCHMARK(BM_canonical_form_structured);
