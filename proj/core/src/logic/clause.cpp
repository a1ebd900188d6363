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

#include "fallacy/logic/clause.hpp"

#include <stdexcept>

namespace fallacy::logic {
namespace {

void require_callable(const Term& term) {
  if (!term.is_callable()) {
    throw std::invalid_argument("goal must be an atom or compound: " +
                                term.to_string());
  }
}

}  // namespace

Literal Literal::goal(Term callable) {
  require_callable(callable);
  return Literal{false, std::move(callable)};
}

Literal Literal::negation(Term callable) {
  require_callable(callable);
  return Literal{true, std::move(callable)};
}

Literal Literal::not_equal(Term lhs, Term rhs) {
  return Literal{false, Inequality{std::move(lhs), std::move(rhs)}};
}

Literal Literal::term_less(Term lhs, Term rhs) {
  return Literal{false, TermLess{std::move(lhs), std::move(rhs)}};
}

void Literal::collect_variables(std::vector<Variable>& out) const {
  if (const auto* goal = std::get_if<Term>(&body)) {
    goal->collect_variables(out);
  } else if (const auto* ne = std::get_if<Inequality>(&body)) {
    ne->lhs.collect_variables(out);
    ne->rhs.collect_variables(out);
  } else {
    const auto& lt = std::get<TermLess>(body);
    lt.lhs.collect_variables(out);
    lt.rhs.collect_variables(out);
  }
}

std::string Literal::to_string() const {
  std::string text;
  if (const auto* goal = std::get_if<Term>(&body)) {
    text = goal->to_string();
  } else if (const auto* ne = std::get_if<Inequality>(&body)) {
    text = ne->lhs.to_string() + " \\= " + ne->rhs.to_string();
  } else {
    const auto& lt = std::get<TermLess>(body);
    text = lt.lhs.to_string() + " @< " + lt.rhs.to_string();
  }
  return negated ? "\\+ " + text : text;
}

std::vector<Variable> Clause::variables() const {
  std::vector<Variable> out;
  head.collect_variables(out);
  for (const auto& literal : body) literal.collect_variables(out);
  return out;
}

std::string Clause::to_string() const {
  std::string out = head.to_string();
  if (!body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i > 0) out += ", ";
      out += body[i].to_string();
    }
  }
  out += '.';
  return out;
}

}  // namespace fallacy::logic
