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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "fallacy/eval/dataset.hpp"
#include "fallacy/eval/metrics.hpp"
#include "fallacy/eval/rational.hpp"
#include "fallacy/eval/score_stats.hpp"

namespace fallacy::eval {

struct EvalReport {
  std::size_t fallacious_entries = 0;
  std::size_t benign_entries = 0;
  DetectionMetrics detection;
  std::map<rules::FallacyCode, Rational> per_fallacy_accuracy;
  RankedScores ranked;
  std::optional<Rational> kappa;
  std::uint64_t label_count = 0;
  ScoreStats scores;
};

/// Detection, per-fallacy accuracy, ranked scores and label count for one
/// set of predictions. Kappa and score statistics are left for the caller.
[[nodiscard]] EvalReport build_report(std::span<const BenchmarkEntry> entries,
                                      std::span<const Prediction> predictions);

/// `{"exact": "2/3", "decimal": "0.666667"}`.
[[nodiscard]] nlohmann::ordered_json rational_json(const Rational& value);

[[nodiscard]] nlohmann::ordered_json report_json(const EvalReport& report);

/// Human-readable summary; rates to three decimals, accuracies as whole
/// percents.
[[nodiscard]] std::string report_text(const EvalReport& report);

/// `method,code,score,count` rows in key order.
[[nodiscard]] std::string histogram_csv(const ScoreStats& stats);

/// Mean table with one row per method and one column per code, two
/// decimals. Adds an enhancement row when both "direct" and "schema"
/// rows are present.
[[nodiscard]] std::string score_summary(const ScoreStats& stats);

}  // namespace fallacy::eval
