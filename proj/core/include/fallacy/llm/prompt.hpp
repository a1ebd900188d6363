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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::llm {

enum class PromptId { kGenFacts, kTransform, kScore, kJudge };

[[nodiscard]] std::string_view prompt_id_name(PromptId id) noexcept;

struct RenderedPrompt {
  std::string system;
  std::string user;
};

using PromptValues = std::map<std::string, std::string, std::less<>>;

/// Instruction and query text with `{name}` placeholders. Braces that do not
/// enclose an identifier are literal.
struct PromptTemplate {
  PromptId id;
  std::string_view instruction;
  std::string_view query;

  /// Distinct placeholder names in order of appearance.
  [[nodiscard]] std::vector<std::string> placeholders() const;
  /// Instruction becomes the system message, query the user message.
  /// Throws PreconditionError naming the first unbound placeholder.
  [[nodiscard]] RenderedPrompt render(const PromptValues& values) const;
};

[[nodiscard]] const PromptTemplate& prompt_template(PromptId id);

/// Substitutes placeholders in `text`; throws PreconditionError when one is
/// unbound.
[[nodiscard]] std::string render_text(std::string_view text, const PromptValues& values);

/// `Name (CODE): definition` for one category.
[[nodiscard]] std::string definition_line(rules::FallacyCode code);
/// All fourteen definition lines, each starting with "- ".
[[nodiscard]] std::string all_definitions_block();

}  // namespace fallacy::llm
