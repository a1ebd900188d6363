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
#include <vector>

#include "fallacy/kb/knowledge_base.hpp"
#include "fallacy/logic/solver.hpp"
#include "fallacy/rules/fallacy_code.hpp"
#include "fallacy/rules/schema.hpp"

namespace fallacy::rules {

/// One ground `pd` instantiation of a schema.
struct ValidTuple {
  FallacyCode code;
  std::vector<logic::Term> args;

  [[nodiscard]] logic::Term to_term() const;
  /// `pd(a, b)`, without the trailing period.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ValidTuple&, const ValidTuple&) = default;
};

/// Read-only view that answers schema heads from the schema rules and
/// everything else from the knowledge base.
class SchemaView : public logic::ClauseDatabase {
 public:
  SchemaView(const FallacySchema& schema, const logic::ClauseDatabase& base,
             bool keep_term_order = true);

  [[nodiscard]] std::span<const logic::Clause* const> clauses_for(
      const logic::PredicateKey& key) const override;
  [[nodiscard]] bool is_loop_checked(const logic::PredicateKey& key) const override;

 private:
  const logic::ClauseDatabase& base_;
  logic::ClauseStore rules_;
};

/// Throws SignatureError when a fact uses a schema predicate name with the
/// wrong arity.
void check_signatures(const FallacySchema& schema, const kb::KnowledgeBase& kb);

/// Every solution of the schema query, duplicates kept.
[[nodiscard]] std::vector<logic::Term> derive_raw(
    FallacyCode code, const kb::KnowledgeBase& kb, bool keep_term_order = true,
    logic::SolveOptions options = {});

/// Distinct valid tuples in first-derivation order. The knowledge base must
/// be sealed.
[[nodiscard]] std::vector<ValidTuple> derive_instances(
    FallacyCode code, const kb::KnowledgeBase& kb, logic::SolveOptions options = {});

/// Tuples that satisfy every body literal except the `@<` order checks.
struct OrderingDiagnostic {
  FallacyCode code;
  std::vector<ValidTuple> rejected;

  /// Multi-line human-readable note; empty when nothing was rejected.
  [[nodiscard]] std::string to_string() const;
};

/// Present only for schemas that use `@<`.
[[nodiscard]] std::optional<OrderingDiagnostic> diagnose_ordering(
    FallacyCode code, const kb::KnowledgeBase& kb, logic::SolveOptions options = {});

}  // namespace fallacy::rules
