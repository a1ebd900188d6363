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

#include "fallacy/eval/report.hpp"

#include <set>

namespace fallacy::eval {

EvalReport build_report(std::span<const BenchmarkEntry> entries,
                        std::span<const Prediction> predictions) {
  EvalReport report;
  for (const auto& e : entries) ++(e.fallacious() ? report.fallacious_entries : report.benign_entries);
  report.detection = detection_metrics(entries, predictions);
  report.per_fallacy_accuracy = per_fallacy_accuracy(entries, predictions);
  report.ranked = ranked_scores(entries, predictions);
  report.label_count = label_count(predictions);
  return report;
}

nlohmann::ordered_json rational_json(const Rational& value) {
  nlohmann::ordered_json j;
  j["exact"] = to_fraction(value);
  j["decimal"] = to_fixed(value, 6);
  return j;
}

nlohmann::ordered_json report_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["entries"] = {{"fallacious", r.fallacious_entries}, {"benign", r.benign_entries}};
  const auto& d = r.detection;
  j["detection"] = {
      {"tp", d.counts.tp},
      {"fp", d.counts.fp},
      {"tn", d.counts.tn},
      {"fn", d.counts.fn},
      {"fp_rate", rational_json(d.fp_rate)},
      {"fn_rate", rational_json(d.fn_rate)},
      {"precision", rational_json(d.precision)},
      {"recall", rational_json(d.recall)},
      {"f1", rational_json(d.f1)},
  };
  nlohmann::ordered_json accuracy = nlohmann::ordered_json::object();
  for (const auto& [code, value] : r.per_fallacy_accuracy) {
    accuracy[std::string(rules::code_name(code))] = rational_json(value);
  }
  j["per_fallacy_accuracy"] = accuracy;
  nlohmann::ordered_json ranked = nlohmann::ordered_json::array();
  for (const auto& [id, score] : r.ranked.scores) {
    nlohmann::ordered_json row = rational_json(score);
    row["id"] = id;
    ranked.push_back(row);
  }
  j["ranked_scores"] = {{"mean", rational_json(r.ranked.mean)}, {"per_entry", ranked}};
  j["label_count"] = r.label_count;
  j["kappa"] = r.kappa ? rational_json(*r.kappa) : nlohmann::ordered_json();
  if (!r.scores.means.empty()) {
    nlohmann::ordered_json means = nlohmann::ordered_json::array();
    for (const auto& [cell, mean] : r.scores.means) {
      nlohmann::ordered_json row = rational_json(mean);
      row["method"] = cell.first;
      row["code"] = std::string(rules::code_name(cell.second));
      means.push_back(row);
    }
    j["score_means"] = means;
  }
  return j;
}

std::string report_text(const EvalReport& r) {
  const auto& d = r.detection;
  std::string out;
  out += "entries: " + std::to_string(r.fallacious_entries + r.benign_entries) +
         " (fallacious " + std::to_string(r.fallacious_entries) + ", benign " +
         std::to_string(r.benign_entries) + ")\n";
  out += "detection: tp=" + std::to_string(d.counts.tp) + " fp=" + std::to_string(d.counts.fp) +
         " tn=" + std::to_string(d.counts.tn) + " fn=" + std::to_string(d.counts.fn) + "\n";
  out += "  fp_rate=" + to_fixed(d.fp_rate, 3) + " fn_rate=" + to_fixed(d.fn_rate, 3) +
         " precision=" + to_fixed(d.precision, 3) + " recall=" + to_fixed(d.recall, 3) +
         " f1=" + to_fixed(d.f1, 3) + "\n";
  if (!r.per_fallacy_accuracy.empty()) {
    out += "per-fallacy accuracy:\n";
    for (const auto& [code, value] : r.per_fallacy_accuracy) {
      out += "  " + std::string(rules::code_name(code)) + " " + to_fixed(value * 100, 0) + "%\n";
    }
  }
  out += "ranked score: mean=" + to_fixed(r.ranked.mean, 3) + " over " +
         std::to_string(r.ranked.scores.size()) + " entries\n";
  out += "label count: " + std::to_string(r.label_count) + "\n";
  if (r.kappa) out += "kappa: " + to_fixed(*r.kappa, 4) + "\n";
  if (!r.scores.means.empty()) out += score_summary(r.scores);
  return out;
}

std::string histogram_csv(const ScoreStats& stats) {
  std::string out = "method,code,score,count\n";
  for (const auto& [key, count] : stats.histogram) {
    out += key.method + "," + std::string(rules::code_name(key.code)) + "," +
           std::to_string(key.score) + "," + std::to_string(count) + "\n";
  }
  return out;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string score_summary(const ScoreStats& stats) {
  std::set<rules::FallacyCode> codes;
  std::vector<std::string> methods;
  for (const auto& [cell, mean] : stats.means) {
    codes.insert(cell.second);
    if (std::find(methods.begin(), methods.end(), cell.first) == methods.end()) {
      methods.push_back(cell.first);
    }
  }
  constexpr std::size_t kLabel = 12;
  constexpr std::size_t kCol = 8;
  std::string out = pad("method", kLabel);
  for (auto code : codes) out += pad(std::string(rules::code_name(code)), kCol);
  out += "\n";
  for (const auto& method : methods) {
    std::string row = pad(method, kLabel);
    for (auto code : codes) {
      const auto it = stats.means.find({method, code});
      row += pad(it == stats.means.end() ? "-" : to_fixed(it->second, 2), kCol);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  const bool comparable = std::find(methods.begin(), methods.end(), "direct") != methods.end() &&
                          std::find(methods.begin(), methods.end(), "schema") != methods.end();
  if (comparable) {
    std::string row = pad("enhance%", kLabel);
    for (auto code : codes) {
      const auto direct = stats.means.find({"direct", code});
      const auto improved = stats.means.find({"schema", code});
      std::string cell = "-";
      if (direct != stats.means.end() && improved != stats.means.end() && direct->second > 0) {
        cell = to_fixed(enhancement(direct->second, improved->second), 2);
      }
      row += pad(cell, kCol);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  return out;
}

}  // namespace fallacy::eval
