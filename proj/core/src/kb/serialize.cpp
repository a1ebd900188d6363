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

#include "fallacy/kb/serialize.hpp"

namespace fallacy::kb {

std::string serialize_clause(const logic::Clause& clause,
                             const std::optional<std::string>& comment) {
  std::string out = clause.to_string();
  if (comment && !comment->empty()) {
    out += "  % ";
    out += *comment;
  }
  return out;
}

std::string serialize_program(std::span<const ParsedClause> clauses) {
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i > 0 && clauses[i].group_id != clauses[i - 1].group_id) out += '\n';
    out += serialize_clause(clauses[i].clause, clauses[i].comment);
    out += '\n';
  }
  return out;
}

}  // namespace fallacy::kb
