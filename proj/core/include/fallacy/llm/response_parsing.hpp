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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::llm {

/// Contents of the Markdown fenced blocks (```...). Text without any fence
/// comes back unchanged.
[[nodiscard]] std::string strip_code_fences(std::string_view text);

/// Blank-line-separated blocks, each trimmed; empty blocks are skipped.
[[nodiscard]] std::vector<std::string> split_blocks(std::string_view text);

/// Non-empty lines with list numbering, bullets and wrapping quotes removed.
[[nodiscard]] std::vector<std::string> split_sentences(std::string_view text);

/// A "score: N" style statement if present, else the first standalone digit
/// in 0..3.
[[nodiscard]] std::optional<int> extract_score(std::string_view text);

struct JudgeVerdict {
  std::string sentence;
  bool logic_error = false;
  /// Canonical codes in the order returned, which encodes rank.
  std::vector<rules::FallacyCode> logic_fallacies;
  std::string details;
};

/// Accepts a raw JSON object or one fenced block holding it. Labels may be
/// an array or a comma-separated string; duplicates after normalization are
/// dropped. Throws JsonError on malformed JSON or an unknown label.
[[nodiscard]] JudgeVerdict parse_verdict(std::string_view response);

}  // namespace fallacy::llm
