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

#include "fallacy/eval/dataset.hpp"

#include <algorithm>

#include "fallacy/error.hpp"
#include "fallacy/io.hpp"

namespace fallacy::eval {

std::string_view source_name(Source source) noexcept {
  switch (source) {
    case Source::kBench: return "bench";
    case Source::kAugmented: return "augmented";
    case Source::kBenign: return "benign";
  }
  return "bench";
}

Source parse_source(std::string_view text) {
  if (text == "bench") return Source::kBench;
  if (text == "augmented") return Source::kAugmented;
  if (text == "benign") return Source::kBenign;
  throw InputError("unknown source \"" + std::string(text) + "\"");
}

void BenchmarkEntry::validate() const {
  if (id.empty()) throw InputError("benchmark entry without an id");
  if ((source == Source::kBenign) != labels.empty()) {
    throw InputError("entry " + id +
                     ": benign entries must have no labels and others at least one");
  }
}

void Prediction::validate() const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i),
                  labels[i]) != labels.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw DuplicateLabelError("prediction " + id + " repeats label " +
                                std::string(rules::code_name(labels[i])));
    }
  }
  if (labels.size() > kMaxPredictedLabels) {
    throw InputError("prediction " + id + " has " + std::to_string(labels.size()) +
                     " labels; at most " + std::to_string(kMaxPredictedLabels) + " allowed");
  }
}

namespace {

nlohmann::json labels_json(const std::vector<rules::FallacyCode>& labels) {
  auto out = nlohmann::json::array();
  for (auto code : labels) out.push_back(std::string(rules::code_name(code)));
  return out;
}

std::vector<rules::FallacyCode> labels_from(const nlohmann::json& value) {
  if (!value.is_array()) throw InputError("labels must be an array");
  std::vector<rules::FallacyCode> out;
  for (const auto& item : value) out.push_back(rules::require_code(item.get<std::string>()));
  return out;
}

template <typename T, typename Fn>
std::vector<T> parse_lines(std::string_view text, Fn&& from_json) {
  std::vector<T> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const DuplicateLabelError& e) {
      throw DuplicateLabelError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const BenchmarkEntry& entry) {
  nlohmann::ordered_json j;
  j["id"] = entry.id;
  j["sentence"] = entry.sentence;
  j["labels"] = labels_json(entry.labels);
  j["source"] = std::string(source_name(entry.source));
  return j;
}

nlohmann::ordered_json to_json(const Prediction& prediction) {
  nlohmann::ordered_json j;
  j["id"] = prediction.id;
  j["logic_error"] = prediction.logic_error;
  j["labels"] = labels_json(prediction.labels);
  return j;
}

std::vector<BenchmarkEntry> parse_benchmark(std::string_view text) {
  return parse_lines<BenchmarkEntry>(text, [](const nlohmann::json& j) {
    BenchmarkEntry e;
    e.id = j.at("id").get<std::string>();
    e.sentence = j.at("sentence").get<std::string>();
    e.labels = labels_from(j.at("labels"));
    e.source = parse_source(j.at("source").get<std::string>());
    e.validate();
    return e;
  });
}

std::vector<Prediction> parse_predictions(std::string_view text) {
  return parse_lines<Prediction>(text, [](const nlohmann::json& j) {
    Prediction p;
    p.id = j.at("id").get<std::string>();
    p.logic_error = j.at("logic_error").get<bool>();
    p.labels = labels_from(j.at("labels"));
    p.validate();
    return p;
  });
}

std::string read_text_file(const std::filesystem::path& path) {
  return read_file_bytes(path, "file");
}

std::vector<BenchmarkEntry> read_benchmark(const std::filesystem::path& path) {
  return parse_benchmark(read_text_file(path));
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  return parse_predictions(read_text_file(path));
}

std::string to_jsonl(const std::vector<BenchmarkEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += to_json(e).dump() + "\n";
  return out;
}

std::string to_jsonl(const std::vector<Prediction>& predictions) {
  std::string out;
  for (const auto& p : predictions) out += to_json(p).dump() + "\n";
  return out;
}

}  // namespace fallacy::eval
