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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fallacy/error.hpp"
#include "fallacy/eval/dataset.hpp"
#include "fallacy/eval/rational.hpp"

namespace fallacy::eval {

struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  friend bool operator==(const Confusion&, const Confusion&) = default;
};

/// Rates with a zero denominator are reported as 0.
struct DetectionMetrics {
  Confusion counts;
  Rational fp_rate;
  Rational fn_rate;
  Rational precision;
  Rational recall;
  Rational f1;
};

/// Pairs each entry with its prediction by id. Throws MismatchError when an
/// entry has no prediction, an id repeats, or a prediction matches nothing.
[[nodiscard]] std::vector<std::pair<const BenchmarkEntry*, const Prediction*>> align(
    std::span<const BenchmarkEntry> entries, std::span<const Prediction> predictions);

[[nodiscard]] DetectionMetrics metrics_from_confusion(const Confusion& counts);

/// Positive class: fallacious entries. A prediction is positive when its
/// logic_error flag is set.
[[nodiscard]] DetectionMetrics detection_metrics(std::span<const BenchmarkEntry> entries,
                                                 std::span<const Prediction> predictions);

/// Fraction of ground-truth occurrences of each code found among the
/// predicted labels. Codes that never occur in the ground truth are absent.
[[nodiscard]] std::map<rules::FallacyCode, Rational> per_fallacy_accuracy(
    std::span<const BenchmarkEntry> entries, std::span<const Prediction> predictions);

/// Sum over predicted labels of +1/i for a hit and -1/i for a miss, where i
/// is the 1-based rank. Throws DuplicateLabelError for repeated predicted
/// labels and PreconditionError for more than kMaxPredictedLabels.
[[nodiscard]] Rational ranked_score(std::span<const rules::FallacyCode> truth,
                                    std::span<const rules::FallacyCode> predicted);

struct RankedScores {
  /// (entry id, score) for every fallacious entry, in entry order.
  std::vector<std::pair<std::string, Rational>> scores;
  Rational mean;
};

[[nodiscard]] RankedScores ranked_scores(std::span<const BenchmarkEntry> entries,
                                         std::span<const Prediction> predictions);

/// Cohen's kappa over categorical annotations compared by equality.
/// Throws LengthMismatchError for unequal or empty inputs.
template <typename T>
[[nodiscard]] Rational cohens_kappa(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size() || a.empty()) {
    throw LengthMismatchError("kappa needs two equally long non-empty annotation lists (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                              ")");
  }
  const auto n = static_cast<std::int64_t>(a.size());
  std::int64_t agree = 0;
  std::map<T, std::pair<std::int64_t, std::int64_t>> marginals;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
    ++marginals[a[i]].first;
    ++marginals[b[i]].second;
  }
  const Rational po = make_rational(agree, n);
  Rational pe = 0;
  for (const auto& [value, counts] : marginals) {
    pe += make_rational(counts.first, n) * make_rational(counts.second, n);
  }
  if (pe == 1) return Rational(1);
  return (po - pe) / (1 - pe);
}

template <typename T>
[[nodiscard]] Rational cohens_kappa(const std::vector<T>& a, const std::vector<T>& b) {
  return cohens_kappa(std::span<const T>(a), std::span<const T>(b));
}

/// Total number of predicted labels.
[[nodiscard]] std::uint64_t label_count(std::span<const Prediction> predictions);

struct ModelLabelCount {
  std::string model;
  std::uint64_t count = 0;

  friend bool operator==(const ModelLabelCount&, const ModelLabelCount&) = default;
};

/// Sorted by count, largest first; ties keep their input order.
[[nodiscard]] std::vector<ModelLabelCount> rank_by_label_count(
    std::vector<ModelLabelCount> counts);

/// Percentage change from the direct mean to the improved mean. Throws
/// DivisionDomainError unless direct_mean > 0.
[[nodiscard]] Rational enhancement(const Rational& direct_mean, const Rational& improved_mean);

}  // namespace fallacy::eval
