#include <benchmark/benchmark.h>

#include "lclab/cech.hpp"
#include "lclab/corpus.hpp"
#include "lclab/report.hpp"

using namespace lclab;

namespace {

Execution execution_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

EngineOptions options_of(const benchmark::State& state) {
  EngineOptions o;
  o.execution = execution_of(state);
  return o;
}

// A four-variable quotient with enough thresholds to produce a few thousand chambers.
const MonomialIdeal kIdeal(4, {{2, 1, 0, 0}, {0, 3, 1, 0}, {1, 0, 2, 1}, {0, 0, 0, 3}, {1, 1, 1, 1}});
const MonomialSequence kSequence(4, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});

void BM_ChamberDecomposition(benchmark::State& state) {
  const auto o = options_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(chamber_decomposition(kIdeal, kSequence, o));
}

void BM_BruteForceBox(benchmark::State& state) {
  const auto o = options_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_box(kIdeal, kSequence, 3, o));
}

void BM_ChamberOracleCorpus(benchmark::State& state) {
  const auto o = options_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_chamber_oracle(0, 120, o));
}

void BM_SubringCriterionCorpus(benchmark::State& state) {
  const auto e = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_subring_criterion(0, 500, Field::rational(), e));
}

void BM_VerifyAllChecks(benchmark::State& state) {
  VerifySettings s;
  s.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_paper(s));
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_ChamberDecomposition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteForceBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChamberOracleCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubringCriterionCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyAllChecks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
