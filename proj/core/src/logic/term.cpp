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

#include "fallacy/logic/term.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fallacy::logic {
namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::vector<Term>& empty_args() {
  static const std::vector<Term> kEmpty;
  return kEmpty;
}

bool variant_walk(const Term& lhs, const Term& rhs,
                  std::map<Variable, Variable>& forward,
                  std::map<Variable, Variable>& backward) {
  if (lhs.is_var() || rhs.is_var()) {
    if (!lhs.is_var() || !rhs.is_var()) return false;
    const auto& a = lhs.as_var();
    const auto& b = rhs.as_var();
    auto f = forward.find(a);
    auto g = backward.find(b);
    if (f == forward.end() && g == backward.end()) {
      forward.emplace(a, b);
      backward.emplace(b, a);
      return true;
    }
    return f != forward.end() && g != backward.end() && f->second == b &&
           g->second == a;
  }
  if (lhs.is_compound() && rhs.is_compound()) {
    if (lhs.name() != rhs.name() || lhs.arity() != rhs.arity()) return false;
    for (std::size_t i = 0; i < lhs.arity(); ++i) {
      if (!variant_walk(lhs.args()[i], rhs.args()[i], forward, backward)) {
        return false;
      }
    }
    return true;
  }
  return lhs == rhs;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  bool has_non_digit = false;
  for (char c : name) {
    if (is_lower(c) || c == '_') {
      has_non_digit = true;
    } else if (!is_digit(c)) {
      return false;
    }
  }
  // Digit-led atoms such as `2_mins` are allowed as long as they are not
  // plain integers.
  return has_non_digit && name.front() != '_';
}

bool is_valid_variable_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (!is_upper(name.front()) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return is_lower(c) || is_upper(c) || is_digit(c) || c == '_';
  });
}

Term::Term() : node_(Atom{"nil"}) {}

Term Term::var(std::string name, std::uint32_t scope) {
  if (!is_valid_variable_name(name)) {
    throw std::invalid_argument("invalid variable name: " + name);
  }
  return Term(Variable{std::move(name), scope});
}

Term Term::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name: " + name);
  }
  return Term(Atom{std::move(name)});
}

Term Term::integer(std::int64_t value) { return Term(Int{value}); }

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term needs at least one argument");
  }
  if (!is_valid_atom_name(functor)) {
    throw std::invalid_argument("invalid functor name: " + functor);
  }
  const bool ground = std::all_of(args.begin(), args.end(),
                                  [](const Term& t) { return t.is_ground(); });
  return Term(std::make_shared<const Compound>(
      Compound{std::move(functor), std::move(args), ground}));
}

std::string_view Term::name() const noexcept {
  if (is_atom()) return as_atom().name;
  if (is_compound()) return as_compound().functor;
  return {};
}

std::size_t Term::arity() const noexcept {
  return is_compound() ? as_compound().args.size() : 0;
}

const std::vector<Term>& Term::args() const noexcept {
  return is_compound() ? as_compound().args : empty_args();
}

bool Term::is_ground() const noexcept {
  if (is_var()) return false;
  if (is_compound()) return as_compound().ground;
  return true;
}

void Term::collect_variables(std::vector<Variable>& out) const {
  if (is_var()) {
    if (std::find(out.begin(), out.end(), as_var()) == out.end()) {
      out.push_back(as_var());
    }
    return;
  }
  if (is_compound() && !as_compound().ground) {
    for (const auto& arg : as_compound().args) arg.collect_variables(out);
  }
}

std::string Term::to_string() const {
  if (is_var()) {
    const auto& v = as_var();
    return v.scope == 0 ? v.name : v.name + "_" + std::to_string(v.scope);
  }
  if (is_atom()) return as_atom().name;
  if (is_int()) return std::to_string(as_int().value);
  const auto& c = as_compound();
  std::string out = c.functor;
  out += '(';
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += c.args[i].to_string();
  }
  out += ')';
  return out;
}

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.node_.index() != rhs.node_.index()) return false;
  if (lhs.is_compound()) {
    const auto& a = lhs.as_compound();
    const auto& b = rhs.as_compound();
    if (&a == &b) return true;
    return a.functor == b.functor && a.args == b.args;
  }
  if (lhs.is_var()) return lhs.as_var() == rhs.as_var();
  if (lhs.is_atom()) return lhs.as_atom() == rhs.as_atom();
  return lhs.as_int() == rhs.as_int();
}

PredicateKey key_of(const Term& callable) {
  return PredicateKey{std::string(callable.name()), callable.arity()};
}

bool is_variant(const Term& lhs, const Term& rhs) {
  if (lhs.is_ground() || rhs.is_ground()) return lhs == rhs;
  std::map<Variable, Variable> forward;
  std::map<Variable, Variable> backward;
  return variant_walk(lhs, rhs, forward, backward);
}

}  // namespace fallacy::logic
