#include <benchmark/benchmark.h>

#include "ekrw/search.hpp"

using namespace ekrw;

static void BM_brute_force_6_4(benchmark::State& state) {
  SearchProblem p;
  p.n = 6;
  p.k = 4;
  p.d = 3;
  p.t = 1;
  p.require_nontrivial = true;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(p).best_size);
}
BENCHMARK(BM_brute_force_6_4);

static void BM_bnb_8_5(benchmark::State& state) {
  SearchProblem p;
  p.n = 8;
  p.k = 5;
  p.d = 3;
  p.t = 1;
  p.require_nontrivial = true;
  long nodes = 0;
  for (auto _ : state) {
    SearchResult r = branch_and_bound_max(p);
    nodes += r.nodes;
    benchmark::DoNotOptimize(r.best_size);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_bnb_8_5);

static void BM_bnb_9_5_seeded(benchmark::State& state) {
  SearchProblem p;
  p.n = 9;
  p.k = 5;
  p.d = 3;
  p.t = 1;
  p.require_nontrivial = true;
  long nodes = 0;
  for (auto _ : state) {
    SearchResult r = branch_and_bound_max(p);
    nodes += r.nodes;
    benchmark::DoNotOptimize(r.best_size);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_bnb_9_5_seeded);
