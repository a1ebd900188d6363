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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/kb/knowledge_base.hpp"
#include "fallacy/kb/parser.hpp"
#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::rules {

enum class FindingKind {
  kUnknownPredicate,
  kArityMismatch,
  kNonGroundFact,
  kRequiredEmpty,
};

/// snake_case name, e.g. "arity_mismatch".
[[nodiscard]] std::string_view finding_kind_name(FindingKind kind) noexcept;

struct Finding {
  FindingKind kind;
  /// `name/arity` of the offending or missing predicate.
  std::string predicate;
  /// 1-based source line; 0 when unknown or not applicable.
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  [[nodiscard]] bool clean() const noexcept { return findings.empty(); }
  [[nodiscard]] bool has(FindingKind kind) const;
  /// One finding per line.
  [[nodiscard]] std::string to_string() const;
};

/// Checks facts against one schema, or against the whole vocabulary when
/// `code` is absent. Rules are not checked. Required-empty findings are only
/// reported when a code is given.
[[nodiscard]] ValidationReport validate_program(std::span<const kb::ParsedClause> program,
                                                std::optional<FallacyCode> code);

[[nodiscard]] ValidationReport validate_kb_against_schema(FallacyCode code,
                                                          const kb::KnowledgeBase& kb);

}  // namespace fallacy::rules
