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

#include <string>
#include <variant>
#include <vector>

#include "fallacy/logic/term.hpp"

namespace fallacy::logic {

/// `lhs \= rhs`: succeeds when the operands do not unify.
struct Inequality {
  Term lhs;
  Term rhs;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// `lhs @< rhs` under the standard order of terms.
struct TermLess {
  Term lhs;
  Term rhs;
  friend bool operator==(const TermLess&, const TermLess&) = default;
};

/// One body element: a goal or builtin, optionally under negation-as-failure.
struct Literal {
  bool negated = false;
  std::variant<Term, Inequality, TermLess> body;

  static Literal goal(Term callable);
  static Literal negation(Term callable);
  static Literal not_equal(Term lhs, Term rhs);
  static Literal term_less(Term lhs, Term rhs);

  [[nodiscard]] bool is_goal() const noexcept {
    return std::holds_alternative<Term>(body);
  }
  [[nodiscard]] const Term& goal_term() const { return std::get<Term>(body); }

  void collect_variables(std::vector<Variable>& out) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// `head :- body.`; an empty body makes a fact.
struct Clause {
  Term head;
  std::vector<Literal> body;

  [[nodiscard]] bool is_fact() const noexcept { return body.empty(); }
  [[nodiscard]] PredicateKey key() const { return key_of(head); }
  [[nodiscard]] std::vector<Variable> variables() const;
  /// Canonical text: single spaces after commas and a trailing period.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

}  // namespace fallacy::logic
