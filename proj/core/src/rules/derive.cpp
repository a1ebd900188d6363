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

#include "fallacy/rules/derive.hpp"

#include <algorithm>

#include "fallacy/error.hpp"

namespace fallacy::rules {

logic::Term ValidTuple::to_term() const { return logic::Term::compound("pd", args); }

std::string ValidTuple::to_string() const { return to_term().to_string(); }

SchemaView::SchemaView(const FallacySchema& schema,
                       const logic::ClauseDatabase& base, bool keep_term_order)
    : base_(base) {
  for (logic::Clause rule : schema.rules) {
    if (!keep_term_order) {
      std::erase_if(rule.body, [](const logic::Literal& l) {
        return std::holds_alternative<logic::TermLess>(l.body);
      });
    }
    rules_.add(std::move(rule));
  }
  for (const auto& key : schema.loop_checked) rules_.mark_loop_checked(key);
}

std::span<const logic::Clause* const> SchemaView::clauses_for(
    const logic::PredicateKey& key) const {
  if (rules_.defines(key)) return rules_.clauses_for(key);
  return base_.clauses_for(key);
}

bool SchemaView::is_loop_checked(const logic::PredicateKey& key) const {
  return rules_.is_loop_checked(key) || base_.is_loop_checked(key);
}

void check_signatures(const FallacySchema& schema, const kb::KnowledgeBase& kb) {
  for (const auto& key : kb.fact_predicates()) {
    for (const auto& expected : schema.predicate_signatures) {
      if (expected.name == key.name && expected.arity != key.arity) {
        throw SignatureError("fact predicate " + key.to_string() +
                             " conflicts with schema signature " +
                             expected.to_string());
      }
    }
  }
}

std::vector<logic::Term> derive_raw(FallacyCode code, const kb::KnowledgeBase& kb,
                                    bool keep_term_order,
                                    logic::SolveOptions options) {
  const FallacySchema& schema = schema_for(code);
  check_signatures(schema, kb);
  const SchemaView view(schema, kb, keep_term_order);
  return logic::findall(schema.query_head, {logic::Literal::goal(schema.query_head)},
                        view, options);
}

namespace {

std::vector<ValidTuple> dedup(FallacyCode code, const std::vector<logic::Term>& raw) {
  std::vector<ValidTuple> out;
  for (const auto& term : raw) {
    if (!term.is_ground()) continue;
    ValidTuple tuple{code, term.args()};
    if (std::find(out.begin(), out.end(), tuple) == out.end()) {
      out.push_back(std::move(tuple));
    }
  }
  return out;
}

}  // namespace

std::vector<ValidTuple> derive_instances(FallacyCode code, const kb::KnowledgeBase& kb,
                                         logic::SolveOptions options) {
  if (!kb.sealed()) {
    throw PreconditionError("derive_instances needs a sealed knowledge base");
  }
  return dedup(code, derive_raw(code, kb, true, options));
}

std::string OrderingDiagnostic::to_string() const {
  if (rejected.empty()) return {};
  std::string out = std::string(code_name(code)) + ": " +
                    std::to_string(rejected.size()) +
                    " candidate(s) rejected only by the @< order check:\n";
  for (const auto& tuple : rejected) {
    out += "  " + tuple.to_string() + "\n";
  }
  return out;
}

std::optional<OrderingDiagnostic> diagnose_ordering(FallacyCode code,
                                                    const kb::KnowledgeBase& kb,
                                                    logic::SolveOptions options) {
  if (!schema_for(code).uses_term_order()) return std::nullopt;
  const auto strict = dedup(code, derive_raw(code, kb, true, options));
  OrderingDiagnostic diagnostic{code, {}};
  for (auto& tuple : dedup(code, derive_raw(code, kb, false, options))) {
    if (std::find(strict.begin(), strict.end(), tuple) == strict.end()) {
      diagnostic.rejected.push_back(std::move(tuple));
    }
  }
  return diagnostic;
}

}  // namespace fallacy::rules
