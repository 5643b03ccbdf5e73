// Copyright 2026 The aegame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "aegame/census.h"
#include "aegame/classifier.h"
#include "aegame/harness.h"
#include "aegame/oracle.h"

namespace aegame {
namespace {

void BM_SolvePrism(benchmark::State& state) {
  const Hypergraph h = gen_family({.family = Family::Prism});
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome(h));
  }
}
BENCHMARK(BM_SolvePrism);

void BM_SolveNunchaku(benchmark::State& state) {
  const Hypergraph h =
      gen_family({.family = Family::Nunchaku, .n = static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome(h));
  }
}
BENCHMARK(BM_SolveNunchaku)->DenseRange(2, 7);

void BM_SolvePrismHub(benchmark::State& state) {
  const Hypergraph h = gen_family({.family = Family::PrismHub});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(h, LastPlayer::EnforcerLast));
  }
}
BENCHMARK(BM_SolvePrismHub)->Unit(benchmark::kMillisecond);

void BM_ClassifyRank2(benchmark::State& state) {
  const Hypergraph g = gen_family({.family = Family::RandomGraph,
                                   .n = static_cast<int>(state.range(0)),
                                   .p = 0.15,
                                   .seed = 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_rank2(g));
  }
}
BENCHMARK(BM_ClassifyRank2)->Arg(8)->Arg(16)->Arg(32);

void BM_ClassifyRank3(benchmark::State& state) {
  const Hypergraph h = gen_family({.family = Family::Cycle3u,
                                   .n = static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_rank3_linear_avoider_last(h));
  }
}
BENCHMARK(BM_ClassifyRank3)->Arg(5)->Arg(20)->Arg(80);

void BM_CanonicalForm(benchmark::State& state) {
  const Hypergraph h = random_linear3(8, 6, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(h));
  }
}
BENCHMARK(BM_CanonicalForm);

}  // namespace
}  // namespace aegame

BENCHMARK_MAIN();
