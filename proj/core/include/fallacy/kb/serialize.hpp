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
#include <span>
#include <string>

#include "fallacy/kb/parser.hpp"
#include "fallacy/logic/clause.hpp"

namespace fallacy::kb {

/// `clause.` followed by `  % comment` when a comment is present.
[[nodiscard]] std::string serialize_clause(
    const logic::Clause& clause,
    const std::optional<std::string>& comment = std::nullopt);

/// One clause per line, a blank line between groups.
[[nodiscard]] std::string serialize_program(std::span<const ParsedClause> clauses);

}  // namespace fallacy::kb
