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

#include "fallacy/rules/fallacy_code.hpp"

#include <algorithm>
#include <cctype>

#include "fallacy/error.hpp"

namespace fallacy::rules {
namespace {

struct CodeInfo {
  FallacyCode code;
  std::string_view short_name;
  std::string_view long_name;
  std::string_view definition;
};

constexpr std::array<CodeInfo, 14> kInfo = {{
    {FallacyCode::ID, "ID", "Improper Distribution or Addition",
     "The erroneous reasoning that individual effects can be directly summed "
     "or distributed across a group without considering their actual impact "
     "or interaction."},
    {FallacyCode::FA, "FA", "False Analogy",
     "The assumption that if A and B share certain characteristics, then B "
     "must also possess other attributes of A, despite lacking a valid basis "
     "for this inference."},
    {FallacyCode::FP, "FP", "False Premise",
     "The establishment of an argument based on an unfounded, non-existent, "
     "or unreasonable assumption, leading to flawed reasoning or invalid "
     "conclusions."},
    {FallacyCode::AF, "AF", "Accident Fallacy",
     "The misapplication of a general rule to a specific case where "
     "exceptions should be considered, treating the rule as absolute without "
     "regard for context or relevant circumstances."},
    {FallacyCode::FC, "FC", "Fallacy of Composition",
     "The mistaken assumption that what is true for a part of something must "
     "also be true for the whole, disregarding the possible differences "
     "between individual components and the entire entity."},
    {FallacyCode::BQ, "BQ", "Begging the Question",
     "The use of a statement as both the premise and the conclusion, assuming "
     "the truth of what is to be proven instead of providing independent "
     "support."},
    {FallacyCode::CT, "CT", "Contextomy",
     "The act of selectively quoting or altering a statement, advertisement, "
     "or published material in a way that distorts its original meaning, "
     "often misrepresenting the intent of the original source."},
    {FallacyCode::IE, "IE", "Inverse Error",
     "The mistaken reasoning that if A implies B, then not A must imply not "
     "B, overlooking the possibility that B may still occur due to other "
     "factors."},
    {FallacyCode::IT, "IT", "Improper Transposition",
     "The incorrect inference that if A implies B, then B must also imply A, "
     "failing to recognise that implication is not necessarily reversible."},
    {FallacyCode::WD, "WD", "Wrong Direction",
     "The incorrect attribution of causality by reversing the cause-and-effect "
     "relationship, assuming the effect is the cause and the cause is the "
     "effect."},
    {FallacyCode::FS, "FS", "False Cause",
     "The incorrect assumption that a causal relationship exists between two "
     "events solely because one follows the other, failing to account for "
     "coincidence or other influencing factors."},
    {FallacyCode::EC, "EC", "Equivocation",
     "The misleading use of a word or phrase that has multiple meanings, "
     "creating ambiguity and leading to confusion in interpretation or "
     "reasoning."},
    {FallacyCode::NF, "NF", "Nominal Fallacy",
     "The mistaken interpretation of a metaphorical or figurative expression "
     "as a literal statement, leading to a misunderstanding of its intended "
     "meaning."},
    {FallacyCode::FD, "FD", "False Dilemma",
     "The presentation of an issue as having only two possible outcomes, "
     "either right or wrong, without recognising that additional alternatives "
     "may exist."},
}};

const CodeInfo& info(FallacyCode code) noexcept {
  return kInfo[static_cast<std::size_t>(code)];
}

std::string normalize(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) != 0) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(std::tolower(uc)));
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::optional<FallacyCode> match_exact(std::string_view text) {
  const std::string key = normalize(text);
  if (key.empty()) return std::nullopt;
  if (key == "ac" || key == "accident") return FallacyCode::AF;
  if (key == "improper distribution" || key == "improper addition") {
    return FallacyCode::ID;
  }
  if (key == "composition") return FallacyCode::FC;
  for (const auto& entry : kInfo) {
    if (key == normalize(entry.short_name) || key == normalize(entry.long_name)) {
      return entry.code;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view code_name(FallacyCode code) noexcept {
  return info(code).short_name;
}

std::string_view full_name(FallacyCode code) noexcept {
  return info(code).long_name;
}

std::string_view definition(FallacyCode code) noexcept {
  return info(code).definition;
}

std::optional<FallacyCode> parse_code(std::string_view text) {
  if (auto code = match_exact(text)) return code;
  // "False Premise (FP)" or "FP - False Premise".
  const auto open = text.find('(');
  const auto close = text.find(')', open == std::string_view::npos ? 0 : open);
  if (open != std::string_view::npos && close != std::string_view::npos) {
    auto inner = match_exact(text.substr(open + 1, close - open - 1));
    auto outer = match_exact(text.substr(0, open));
    if (inner && (!outer || *outer == *inner)) return inner;
    if (outer && !inner) return outer;
  }
  for (std::string_view sep : {" - ", ": "}) {
    const auto pos = text.find(sep);
    if (pos == std::string_view::npos) continue;
    auto left = match_exact(text.substr(0, pos));
    auto right = match_exact(text.substr(pos + sep.size()));
    if (left && (!right || *right == *left)) return left;
    if (right && !left) return right;
  }
  return std::nullopt;
}

FallacyCode require_code(std::string_view text) {
  if (auto code = parse_code(text)) return *code;
  throw InputError("unknown fallacy label: \"" + std::string(text) + "\"");
}

}  // namespace fallacy::rules
