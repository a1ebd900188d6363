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

#include "fallacy/eval/metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace fallacy::eval {

std::vector<std::pair<const BenchmarkEntry*, const Prediction*>> align(
    std::span<const BenchmarkEntry> entries, std::span<const Prediction> predictions) {
  std::unordered_map<std::string_view, const Prediction*> by_id;
  for (const auto& p : predictions) {
    if (!by_id.emplace(p.id, &p).second) {
      throw MismatchError("more than one prediction for entry " + p.id);
    }
  }
  std::vector<std::pair<const BenchmarkEntry*, const Prediction*>> out;
  out.reserve(entries.size());
  std::unordered_map<std::string_view, bool> seen;
  for (const auto& e : entries) {
    if (!seen.emplace(e.id, true).second) throw MismatchError("duplicate entry id " + e.id);
    const auto it = by_id.find(e.id);
    if (it == by_id.end()) throw MismatchError("no prediction for entry " + e.id);
    out.emplace_back(&e, it->second);
  }
  if (out.size() != predictions.size()) {
    for (const auto& p : predictions) {
      if (!seen.contains(p.id)) throw MismatchError("prediction " + p.id + " matches no entry");
    }
  }
  return out;
}

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return Rational(0);
  return make_rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

DetectionMetrics metrics_from_confusion(const Confusion& c) {
  DetectionMetrics m;
  m.counts = c;
  m.fp_rate = ratio(c.fp, c.fp + c.tn);
  m.fn_rate = ratio(c.fn, c.fn + c.tp);
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  const Rational sum = m.precision + m.recall;
  m.f1 = sum > 0 ? Rational(2 * m.precision * m.recall / sum) : Rational(0);
  return m;
}

DetectionMetrics detection_metrics(std::span<const BenchmarkEntry> entries,
                                   std::span<const Prediction> predictions) {
  Confusion c;
  for (const auto& [entry, pred] : align(entries, predictions)) {
    if (entry->fallacious()) {
      ++(pred->logic_error ? c.tp : c.fn);
    } else {
      ++(pred->logic_error ? c.fp : c.tn);
    }
  }
  return metrics_from_confusion(c);
}

std::map<rules::FallacyCode, Rational> per_fallacy_accuracy(
    std::span<const BenchmarkEntry> entries, std::span<const Prediction> predictions) {
  std::map<rules::FallacyCode, std::pair<std::int64_t, std::int64_t>> tally;
  for (const auto& [entry, pred] : align(entries, predictions)) {
    for (auto code : entry->labels) {
      auto& [hits, total] = tally[code];
      ++total;
      if (std::find(pred->labels.begin(), pred->labels.end(), code) != pred->labels.end()) {
        ++hits;
      }
    }
  }
  std::map<rules::FallacyCode, Rational> out;
  for (const auto& [code, counts] : tally) out.emplace(code, make_rational(counts.first, counts.second));
  return out;
}

Rational ranked_score(std::span<const rules::FallacyCode> truth,
                      std::span<const rules::FallacyCode> predicted) {
  if (predicted.size() > kMaxPredictedLabels) {
    throw PreconditionError("at most " + std::to_string(kMaxPredictedLabels) +
                            " predicted labels are allowed, got " +
                            std::to_string(predicted.size()));
  }
  Rational score = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const auto begin = predicted.begin();
    if (std::find(begin, begin + static_cast<std::ptrdiff_t>(i), predicted[i]) !=
        begin + static_cast<std::ptrdiff_t>(i)) {
      throw DuplicateLabelError("predicted label " +
                                std::string(rules::code_name(predicted[i])) + " repeats");
    }
    const bool hit = std::find(truth.begin(), truth.end(), predicted[i]) != truth.end();
    const Rational term = make_rational(1, static_cast<std::int64_t>(i + 1));
    score += hit ? term : Rational(-term);
  }
  return score;
}

RankedScores ranked_scores(std::span<const BenchmarkEntry> entries,
                           std::span<const Prediction> predictions) {
  RankedScores out;
  Rational total = 0;
  for (const auto& [entry, pred] : align(entries, predictions)) {
    if (!entry->fallacious()) continue;
    Rational s = ranked_score(entry->labels, pred->labels);
    total += s;
    out.scores.emplace_back(entry->id, std::move(s));
  }
  out.mean = out.scores.empty()
                 ? Rational(0)
                 : Rational(total / static_cast<std::int64_t>(out.scores.size()));
  return out;
}

std::uint64_t label_count(std::span<const Prediction> predictions) {
  std::uint64_t total = 0;
  for (const auto& p : predictions) total += p.labels.size();
  return total;
}

std::vector<ModelLabelCount> rank_by_label_count(std::vector<ModelLabelCount> counts) {
  std::stable_sort(counts.begin(), counts.end(),
                   [](const auto& a, const auto& b) { return a.count > b.count; });
  return counts;
}

Rational enhancement(const Rational& direct_mean, const Rational& improved_mean) {
  if (!(direct_mean > 0)) {
    throw DivisionDomainError("enhancement needs a positive direct mean, got " +
                              to_fraction(direct_mean));
  }
  return (improved_mean - direct_mean) / direct_mean * 100;
}

}  // namespace fallacy::eval
