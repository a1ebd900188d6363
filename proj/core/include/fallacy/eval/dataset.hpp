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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::eval {

enum class Source { kBench, kAugmented, kBenign };

[[nodiscard]] std::string_view source_name(Source source) noexcept;
/// Throws InputError for anything but "bench", "augmented" or "benign".
[[nodiscard]] Source parse_source(std::string_view text);

/// A benchmark sentence with its ground-truth labels. Benign entries, and
/// only those, have no labels.
struct BenchmarkEntry {
  std::string id;
  std::string sentence;
  std::vector<rules::FallacyCode> labels;
  Source source = Source::kBench;

  [[nodiscard]] bool fallacious() const noexcept { return source != Source::kBenign; }
  /// Throws InputError when the source and labels disagree.
  void validate() const;

  friend bool operator==(const BenchmarkEntry&, const BenchmarkEntry&) = default;
};

/// At most this many labels may be predicted (all categories but one).
inline constexpr std::size_t kMaxPredictedLabels = 13;

struct Prediction {
  std::string id;
  bool logic_error = false;
  /// Ranked, most relevant first.
  std::vector<rules::FallacyCode> labels;

  /// Throws DuplicateLabelError for repeated labels and InputError when
  /// there are more than kMaxPredictedLabels.
  void validate() const;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

[[nodiscard]] nlohmann::ordered_json to_json(const BenchmarkEntry& entry);
[[nodiscard]] nlohmann::ordered_json to_json(const Prediction& prediction);

/// JSON lines; blank lines are skipped. Errors name the offending line.
[[nodiscard]] std::vector<BenchmarkEntry> parse_benchmark(std::string_view text);
[[nodiscard]] std::vector<Prediction> parse_predictions(std::string_view text);
[[nodiscard]] std::vector<BenchmarkEntry> read_benchmark(const std::filesystem::path& path);
[[nodiscard]] std::vector<Prediction> read_predictions(const std::filesystem::path& path);

[[nodiscard]] std::string to_jsonl(const std::vector<BenchmarkEntry>& entries);
[[nodiscard]] std::string to_jsonl(const std::vector<Prediction>& predictions);

/// Whole file as a string; throws InputError when unreadable.
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace fallacy::eval
