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
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/logic/clause.hpp"

namespace fallacy::kb {

/// A clause as it appeared in a fact file.
struct ParsedClause {
  logic::Clause clause;
  /// Trailing `%` comment on the clause's final line, trimmed.
  std::optional<std::string> comment;
  /// Index of the blank-line-separated block holding the clause.
  std::size_t group_id = 0;
  /// 1-based line where the clause starts.
  std::size_t line = 0;

  friend bool operator==(const ParsedClause& lhs, const ParsedClause& rhs) {
    return lhs.clause == rhs.clause && lhs.comment == rhs.comment &&
           lhs.group_id == rhs.group_id;
  }
};

/// Parses a fact file. Throws SyntaxError with the position and token of the
/// first problem. Each anonymous `_` becomes a distinct fresh variable.
[[nodiscard]] std::vector<ParsedClause> parse_program(std::string_view text);

/// A single term such as `pd(a, X)`; trailing input is an error.
[[nodiscard]] logic::Term parse_term(std::string_view text);

/// A conjunction of body literals, with an optional final period.
[[nodiscard]] std::vector<logic::Literal> parse_query(std::string_view text);

}  // namespace fallacy::kb
