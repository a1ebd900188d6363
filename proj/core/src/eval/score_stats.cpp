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

#include "fallacy/eval/score_stats.hpp"

namespace fallacy::eval {
namespace {

void recompute_means(ScoreStats& stats) {
  std::map<CellKey, std::pair<std::int64_t, std::int64_t>> sums;
  for (const auto& [key, count] : stats.histogram) {
    auto& [total, n] = sums[{key.method, key.code}];
    total += key.score * static_cast<std::int64_t>(count);
    n += static_cast<std::int64_t>(count);
  }
  stats.means.clear();
  for (const auto& [cell, s] : sums) {
    if (s.second > 0) stats.means.emplace(cell, make_rational(s.first, s.second));
  }
}

}  // namespace

void ScoreStats::merge(const ScoreStats& other) {
  for (const auto& [key, count] : other.histogram) histogram[key] += count;
  recompute_means(*this);
}

ScoreStats score_stats(std::span<const llm::ScoreTriple> triples, const std::string& method) {
  ScoreStats stats;
  for (const auto& t : triples) {
    for (int s : t.scores) ++stats.histogram[HistogramKey{method, t.code, s}];
  }
  recompute_means(stats);
  return stats;
}

}  // namespace fallacy::eval
