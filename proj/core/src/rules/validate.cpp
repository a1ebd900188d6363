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

#include "fallacy/rules/validate.hpp"

#include <algorithm>

#include "fallacy/rules/schema.hpp"
#include "fallacy/rules/vocabulary.hpp"

namespace fallacy::rules {

std::string_view finding_kind_name(FindingKind kind) noexcept {
  switch (kind) {
    case FindingKind::kUnknownPredicate: return "unknown_predicate";
    case FindingKind::kArityMismatch: return "arity_mismatch";
    case FindingKind::kNonGroundFact: return "non_ground_fact";
    case FindingKind::kRequiredEmpty: return "required_empty";
  }
  return "unknown";
}

bool ValidationReport::has(FindingKind kind) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const Finding& f) { return f.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& f : findings) {
    out += std::string(finding_kind_name(f.kind)) + " " + f.predicate;
    if (f.line > 0) out += " (line " + std::to_string(f.line) + ")";
    out += ": " + f.message + "\n";
  }
  return out;
}

namespace {

std::vector<logic::PredicateKey> allowed_signatures(std::optional<FallacyCode> code) {
  if (code) return schema_for(*code).predicate_signatures;
  std::vector<logic::PredicateKey> out;
  for (const auto& p : vocabulary()) out.push_back(p.key());
  return out;
}

void check_fact(const logic::Clause& fact, std::size_t line,
                const std::vector<logic::PredicateKey>& allowed,
                ValidationReport& report) {
  const auto key = fact.key();
  const std::string text = fact.to_string();
  if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
    const auto same_name = std::find_if(allowed.begin(), allowed.end(),
                                        [&](const auto& k) { return k.name == key.name; });
    if (same_name != allowed.end()) {
      report.findings.push_back({FindingKind::kArityMismatch, key.to_string(), line,
                                 "expected " + same_name->to_string() + " in " + text});
    } else {
      report.findings.push_back({FindingKind::kUnknownPredicate, key.to_string(), line,
                                 "not in the predicate set: " + text});
    }
  }
  if (!fact.head.is_ground()) {
    report.findings.push_back({FindingKind::kNonGroundFact, key.to_string(), line,
                               "fact contains variables: " + text});
  }
}

void check_required(FallacyCode code, const std::vector<logic::PredicateKey>& present,
                    ValidationReport& report) {
  for (const auto& key : schema_for(code).required_predicates) {
    if (std::find(present.begin(), present.end(), key) == present.end()) {
      report.findings.push_back({FindingKind::kRequiredEmpty, key.to_string(), 0,
                                 "required by the " + std::string(code_name(code)) +
                                     " schema but has no facts"});
    }
  }
}

}  // namespace

ValidationReport validate_program(std::span<const kb::ParsedClause> program,
                                  std::optional<FallacyCode> code) {
  ValidationReport report;
  const auto allowed = allowed_signatures(code);
  std::vector<logic::PredicateKey> present;
  for (const auto& parsed : program) {
    if (!parsed.clause.is_fact()) continue;
    check_fact(parsed.clause, parsed.line, allowed, report);
    auto key = parsed.clause.key();
    if (std::find(present.begin(), present.end(), key) == present.end()) {
      present.push_back(std::move(key));
    }
  }
  if (code) check_required(*code, present, report);
  return report;
}

ValidationReport validate_kb_against_schema(FallacyCode code,
                                            const kb::KnowledgeBase& kb) {
  ValidationReport report;
  const auto allowed = allowed_signatures(code);
  for (const auto& fact : kb.facts()) check_fact(fact.clause, 0, allowed, report);
  check_required(code, kb.fact_predicates(), report);
  return report;
}

}  // namespace fallacy::rules
