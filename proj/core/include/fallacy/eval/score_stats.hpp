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

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "fallacy/eval/rational.hpp"
#include "fallacy/llm/score_triple.hpp"
#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::eval {

struct HistogramKey {
  std::string method;
  rules::FallacyCode code;
  int score = 0;

  friend auto operator<=>(const HistogramKey&, const HistogramKey&) = default;
};

using CellKey = std::pair<std::string, rules::FallacyCode>;

struct ScoreStats {
  /// Individual scores counted per (method, code, score).
  std::map<HistogramKey, std::uint64_t> histogram;
  /// Mean of every individual score in a (method, code) cell.
  std::map<CellKey, Rational> means;

  /// Adds another method's cells; a repeated cell is recomputed from the
  /// combined histogram.
  void merge(const ScoreStats& other);
};

/// Histogram and per-code means of the triples under one method tag.
[[nodiscard]] ScoreStats score_stats(std::span<const llm::ScoreTriple> triples,
                                     const std::string& method);

}  // namespace fallacy::eval
