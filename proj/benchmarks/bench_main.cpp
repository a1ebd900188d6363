// Copyright 2026 The fallacyforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <string>

#include "fallacy/eval/metrics.hpp"
#include "fallacy/kb/knowledge_base.hpp"
#include "fallacy/kb/seeds.hpp"
#include "fallacy/rules/derive.hpp"

namespace {

using fallacy::rules::FallacyCode;

void BM_DeriveSeed(benchmark::State& state) {
  const auto code = fallacy::rules::kSchemaCodes[static_cast<std::size_t>(state.range(0))];
  const auto kb = fallacy::kb::load_seed(code);
  for (auto _ : state) benchmark::DoNotOptimize(fallacy::rules::derive_instances(code, kb));
  state.SetLabel(std::string(fallacy::rules::code_name(code)));
}
BENCHMARK(BM_DeriveSeed)->DenseRange(0, 10);

// An im/2 ring of n nodes with a second cause feeding each node, so every
// IT candidate walks the cyclic closure.
void BM_DeriveCyclicChain(benchmark::State& state) {
  const auto n = state.range(0);
  std::string text;
  for (std::int64_t i = 0; i < n; ++i) {
    text += "im(c" + std::to_string(i) + ", c" + std::to_string((i + 1) % n) + ").\n";
    text += "im(d" + std::to_string(i) + ", c" + std::to_string((i + 1) % n) + ").\n";
  }
  auto kb = fallacy::kb::KnowledgeBase::parse(text);
  kb.seal();
  for (auto _ : state) benchmark::DoNotOptimize(fallacy::rules::derive_raw(FallacyCode::IT, kb));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DeriveCyclicChain)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_RankedScore(benchmark::State& state) {
  std::vector<FallacyCode> predicted(fallacy::rules::kAllCodes.begin() + 1,
                                     fallacy::rules::kAllCodes.end());
  const std::vector<FallacyCode> truth = {fallacy::rules::kAllCodes.front()};
  for (auto _ : state) benchmark::DoNotOptimize(fallacy::eval::ranked_score(truth, predicted));
}
BENCHMARK(BM_RankedScore);

}  // namespace

BENCHMARK_MAIN();
