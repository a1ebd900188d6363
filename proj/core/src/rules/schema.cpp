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

#include "fallacy/rules/schema.hpp"

#include <algorithm>
#include <array>

#include "fallacy/error.hpp"
#include "fallacy/kb/parser.hpp"

namespace fallacy::rules {
namespace {

std::string_view rule_text(FallacyCode code) {
  switch (code) {
    case FallacyCode::ID:
      return "pd(A, Delta, E, Upsilon) :- he(X, A, E), he(X, Delta, Upsilon), "
             "vc(A, R, Delta), \\+ vc(E, R, Upsilon).\n";
    case FallacyCode::FA:
      return "pd(E, Pi, X, Phi) :- hp(E, X), hp(Pi, X), hp(E, Phi), E \\= Pi, "
             "\\+ hp(Pi, Phi).\n";
    case FallacyCode::FP:
      return "pd(X, Phi, Pi, O, Gamma) :- ef(X, Phi), fp(Phi, Pi), po(O, Pi), "
             "fplc(Pi, O, Gamma).\n";
    case FallacyCode::AF:
      return "pd(O, R, I, K) :- hr(O, R), rri(R, I), rui(R, K), I \\= K.\n";
    case FallacyCode::FC:
      return "pd(X, Pi, Omega) :- hp(X, Pi), ipo(X, Omega), lp(Omega, Pi).\n";
    case FallacyCode::BQ:
      return "pd(X, A) :- ca(X, A), ema(A, E), emrc(E, X).\n";
    case FallacyCode::CT:
      return "pd(Theta, Gamma) :- qc(Theta, M), qoc(Theta, Delta), "
             "froc(Delta, Phi), ifqoc(Phi, Gamma).\n";
    case FallacyCode::IE:
      return "pd(Delta, E) :- cc(A, Delta), cc(B, E), im(A, B), \\+ im(B, A).\n";
    case FallacyCode::IT:
      return "pd(A, B) :- im(A, B), im(X, B), X \\= A, \\+ im_t(A, X), "
             "\\+ im_t(X, A).\n"
             "im_t(Xi, Psi) :- im(Xi, Psi).\n"
             "im_t(Xi, Psi) :- im(Xi, H), im_t(H, Psi).\n";
    case FallacyCode::WD:
      return "pd(Pi, X) :- oc(X, Pi), \\+ cs(Pi, X).\n"
             "oc(X, Pi) :- cs(X, Pi), \\+ other_cause(X, Pi).\n"
             "other_cause(X, Pi) :- cs(Z, Pi), Z \\= X.\n";
    case FallacyCode::FS:
      return "pd(T, E) :- ha(Upsilon, T), ha(Upsilon, E), rc(X, E), X \\= T, "
             "T @< E.\n";
    case FallacyCode::EC:
    case FallacyCode::NF:
    case FallacyCode::FD:
      break;
  }
  throw UnknownSchemaError("no rule schema for " + std::string(code_name(code)));
}

void push_unique(std::vector<logic::PredicateKey>& out, logic::PredicateKey key) {
  if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
}

FallacySchema build(FallacyCode code) {
  FallacySchema schema{};
  schema.code = code;
  schema.text = rule_text(code);
  for (auto& parsed : kb::parse_program(schema.text)) {
    schema.rules.push_back(std::move(parsed.clause));
  }
  schema.query_head = schema.rules.front().head;
  for (std::size_t i = 1; i < schema.rules.size(); ++i) {
    push_unique(schema.auxiliary_heads, schema.rules[i].key());
  }
  for (const auto& rule : schema.rules) {
    for (const auto& literal : rule.body) {
      if (!literal.is_goal()) continue;
      auto key = logic::key_of(literal.goal_term());
      const bool auxiliary =
          std::find(schema.auxiliary_heads.begin(), schema.auxiliary_heads.end(),
                    key) != schema.auxiliary_heads.end();
      if (auxiliary) continue;
      if (!literal.negated) push_unique(schema.required_predicates, key);
      push_unique(schema.predicate_signatures, std::move(key));
    }
  }
  if (code == FallacyCode::IT) {
    schema.loop_checked.push_back(logic::PredicateKey{"im_t", 2});
  }
  return schema;
}

}  // namespace

bool FallacySchema::uses_term_order() const {
  return std::any_of(rules.begin(), rules.end(), [](const logic::Clause& c) {
    return std::any_of(c.body.begin(), c.body.end(), [](const logic::Literal& l) {
      return std::holds_alternative<logic::TermLess>(l.body);
    });
  });
}

const FallacySchema& schema_for(FallacyCode code) {
  if (!has_schema(code)) {
    throw UnknownSchemaError("no rule schema for " + std::string(code_name(code)));
  }
  static const std::array<FallacySchema, kSchemaCodes.size()> kSchemas = [] {
    std::array<FallacySchema, kSchemaCodes.size()> out{};
    for (std::size_t i = 0; i < kSchemaCodes.size(); ++i) out[i] = build(kSchemaCodes[i]);
    return out;
  }();
  return kSchemas[static_cast<std::size_t>(code)];
}

std::string export_catalog() {
  std::string out;
  for (FallacyCode code : kSchemaCodes) {
    const auto& schema = schema_for(code);
    if (!out.empty()) out += '\n';
    out += "% ";
    out += code_name(code);
    out += ": ";
    out += full_name(code);
    out += " (pd/" + std::to_string(schema.arity()) + ")\n";
    for (const auto& rule : schema.rules) {
      out += rule.to_string();
      out += '\n';
    }
  }
  return out;
}

}  // namespace fallacy::rules
