// Copyright 2026 The patprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "patprob/markov.hpp"
#include "patprob/oracle.hpp"
#include "patprob/recursions.hpp"

namespace patprob {
namespace {

const Word& pattern() {
  static const Word b = Word::parse("110110", 2);
  return b;
}

void BM_ShortRecursion(benchmark::State& state) {
  const BifixIndicator h = bifix_indicator(pattern());
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_table_short(h, 2, K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShortRecursion)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_LongRecursion(benchmark::State& state) {
  const BifixIndicator h = bifix_indicator(pattern());
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_table_long(h, 2, K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongRecursion)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PRecursion(benchmark::State& state) {
  const BifixIndicator h = bifix_indicator(pattern());
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(P_table(h, 2, K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PRecursion)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ChainTable(benchmark::State& state) {
  const BifixIndicator h = bifix_indicator(pattern());
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chain_prob_table(h, 2, K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChainTable)->RangeMultiplier(4)->Range(16, 256)->Complexity();

void BM_AutomatonCounts(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(automaton_counts(pattern(), K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AutomatonCounts)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Enumeration(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_counts(pattern(), K));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << K));
}
BENCHMARK(BM_Enumeration)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_ExpectedWaitSeries(benchmark::State& state) {
  const BifixIndicator h = bifix_indicator(pattern());
  for (auto _ : state) benchmark::DoNotOptimize(expected_wait_series(h, 2, 1e-9, 1000000));
}
BENCHMARK(BM_ExpectedWaitSeries)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const McConfig cfg{.trials = 10000, .k = 64, .workers = 1};
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(pattern(), cfg));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace patprob

BENCHMARK_MAIN();
