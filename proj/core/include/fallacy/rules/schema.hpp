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
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/logic/clause.hpp"
#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::rules {

/// Rule set whose `pd` instantiations are instances of one fallacy.
struct FallacySchema {
  FallacyCode code;
  /// `pd(...)` with the main rule's head variables.
  logic::Term query_head;
  /// Main rule first, then auxiliary rules.
  std::vector<logic::Clause> rules;
  /// Base predicates read by the rule bodies, in first-use order.
  std::vector<logic::PredicateKey> predicate_signatures;
  /// Base predicates used in a positive literal; a knowledge base without
  /// facts for one of these cannot derive anything.
  std::vector<logic::PredicateKey> required_predicates;
  /// Heads defined by auxiliary rules.
  std::vector<logic::PredicateKey> auxiliary_heads;
  /// Auxiliaries evaluated with a visited set.
  std::vector<logic::PredicateKey> loop_checked;
  /// The rules in fact-file syntax.
  std::string_view text;

  [[nodiscard]] std::size_t arity() const noexcept { return query_head.arity(); }
  /// Whether any body uses the `@<` order check.
  [[nodiscard]] bool uses_term_order() const;
};

/// Throws UnknownSchemaError for label-only codes.
[[nodiscard]] const FallacySchema& schema_for(FallacyCode code);

/// Every schema in fact-file syntax, each preceded by a `%` header line.
[[nodiscard]] std::string export_catalog();

}  // namespace fallacy::rules
