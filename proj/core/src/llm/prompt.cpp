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

#include "fallacy/llm/prompt.hpp"

#include <cctype>

#include "fallacy/error.hpp"

namespace fallacy::llm {
namespace {

constexpr PromptTemplate kGenFacts{
    PromptId::kGenFacts,
    "generate {count} new {fallacy_type} prolog knowledge combinations, below "
    "are examples.",
    "{Prolog_Facts}\n{Prolog_rule}\n"
    "Write each combination as its own block of facts separated by a blank "
    "line, using only the predicates above, with a short % comment after "
    "each fact."};

constexpr PromptTemplate kTransform{
    PromptId::kTransform,
    "Generate {count} new {fallacy_type} Prolog knowledge combinations. Study "
    "the style of the sentences in the provided list and transform the given "
    "Prolog facts into natural language sentences that follow a similar style "
    "and structure.",
    "List:\n[{list_of_sentence}]\n\nProlog Facts:\n{prolog_facts}\n\n"
    "Return exactly {count} sentences, one per line, in the same order as the "
    "facts."};

constexpr PromptTemplate kScore{
    PromptId::kScore,
    "You are a professional logical fallacy evaluator. Your task is to review "
    "a file containing sentences that illustrate specific logical fallacies "
    "and assign each a score based on how well the sentence demonstrates the "
    "intended fallacy (as indicated by its type field). Evaluate them more "
    "holistically based on your understanding of how these fallacies manifest "
    "in real-world human communication and reasoning. Do not use code-based "
    "method.\n"
    "Scoring Guide:\n"
    "- Score 0: The sentence makes no sense or does not exhibit the intended "
    "logical error.\n"
    "- Score 1: The sentence shows only minor applicability of the fallacy in "
    "its type field.\n"
    "- Score 2: The sentence largely demonstrates the fallacy.\n"
    "- Score 3: The sentence is a perfect example of the logical fallacy as "
    "described in its type.\n"
    "Definitions:\n"
    "-{fallacy_definitions}.",
    "Here are {count} sentences.\n{sentences}\n"
    "Reply with the score as \"score: N\"."};

constexpr PromptTemplate kJudge{
    PromptId::kJudge,
    "You're an expert in logic.\n"
    "Here's a categorisation of the 14 logic errors. Given sentences with "
    "logical errors, reflect on them and deal with them as required.\n"
    "{All_Logical_Fallacies_Definitions}",
    "Judge the following element:\n\n{sentence}\n\n"
    "Please return the result in JSON format as follows:\n\n"
    "{\n"
    "  \"sentence\": \"The input sentence as provided.\",\n"
    "  \"logic_error\": \"yes or no - indicate whether the sentence contains a "
    "logical error.\",\n"
    "  \"logic_fallacies\": \"List all applicable fallacy categories, ranked by "
    "relevance.\",\n"
    "  \"details\": \"Provide a clear and explicit explanation supporting your "
    "judgment.\"\n"
    "}"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Length of the placeholder starting at text[pos] == '{', or 0.
std::size_t placeholder_length(std::string_view text, std::size_t pos) {
  std::size_t i = pos + 1;
  if (i >= text.size() || !is_ident_start(text[i])) return 0;
  while (i < text.size() && is_ident_char(text[i])) ++i;
  return i < text.size() && text[i] == '}' ? i - pos + 1 : 0;
}

template <typename Fn>
void for_each_placeholder(std::string_view text, Fn&& fn) {
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] != '{') continue;
    if (const auto len = placeholder_length(text, pos); len > 0) {
      fn(pos, text.substr(pos + 1, len - 2));
      pos += len - 1;
    }
  }
}

}  // namespace

std::string_view prompt_id_name(PromptId id) noexcept {
  switch (id) {
    case PromptId::kGenFacts: return "gen_facts";
    case PromptId::kTransform: return "transform";
    case PromptId::kScore: return "score";
    case PromptId::kJudge: return "judge";
  }
  return "unknown";
}

std::string render_text(std::string_view text, const PromptValues& values) {
  std::string out;
  std::size_t copied = 0;
  for_each_placeholder(text, [&](std::size_t pos, std::string_view name) {
    const auto it = values.find(name);
    if (it == values.end()) {
      throw PreconditionError("unbound prompt placeholder {" + std::string(name) + "}");
    }
    out.append(text.substr(copied, pos - copied));
    out += it->second;
    copied = pos + name.size() + 2;
  });
  out.append(text.substr(copied));
  return out;
}

std::vector<std::string> PromptTemplate::placeholders() const {
  std::vector<std::string> out;
  auto collect = [&](std::size_t, std::string_view name) {
    for (const auto& existing : out) {
      if (existing == name) return;
    }
    out.emplace_back(name);
  };
  for_each_placeholder(instruction, collect);
  for_each_placeholder(query, collect);
  return out;
}

RenderedPrompt PromptTemplate::render(const PromptValues& values) const {
  return RenderedPrompt{render_text(instruction, values), render_text(query, values)};
}

const PromptTemplate& prompt_template(PromptId id) {
  switch (id) {
    case PromptId::kGenFacts: return kGenFacts;
    case PromptId::kTransform: return kTransform;
    case PromptId::kScore: return kScore;
    case PromptId::kJudge: return kJudge;
  }
  throw PreconditionError("unknown prompt id");
}

std::string definition_line(rules::FallacyCode code) {
  return std::string(rules::full_name(code)) + " (" +
         std::string(rules::code_name(code)) + "): " +
         std::string(rules::definition(code));
}

std::string all_definitions_block() {
  std::string out;
  for (auto code : rules::kAllCodes) {
    out += "- " + definition_line(code) + "\n";
  }
  return out;
}

}  // namespace fallacy::llm
