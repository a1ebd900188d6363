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

#include "fallacy/logic/substitution.hpp"

#include <utility>

namespace fallacy::logic {

const Term* Substitution::lookup(const Variable& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(const Variable& var, Term value) {
  bindings_.insert_or_assign(var, std::move(value));
}

void Substitution::unbind(const Variable& var) { bindings_.erase(var); }

Term Substitution::walk(const Term& term) const {
  const Term* current = &term;
  while (current->is_var()) {
    const Term* next = lookup(current->as_var());
    if (next == nullptr) break;
    current = next;
  }
  return *current;
}

Term Substitution::apply(const Term& term) const {
  Term resolved = walk(term);
  if (!resolved.is_compound() || resolved.is_ground()) return resolved;
  const auto& compound = resolved.as_compound();
  std::vector<Term> args;
  args.reserve(compound.args.size());
  for (const auto& arg : compound.args) args.push_back(apply(arg));
  return Term::compound(compound.functor, std::move(args));
}

Substitution Substitution::restricted_to(std::span<const Variable> vars) const {
  Substitution out;
  for (const auto& var : vars) {
    if (lookup(var) == nullptr) continue;
    out.bind(var, apply(Term::var(var.name, var.scope)));
  }
  return out;
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, value] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += Term::var(var.name, var.scope).to_string();
    out += " \xE2\x86\xA6 ";  // ↦
    out += apply(value).to_string();
  }
  out += "}";
  return out;
}

bool operator==(const Substitution& lhs, const Substitution& rhs) {
  if (lhs.bindings_.size() != rhs.bindings_.size()) return false;
  for (const auto& [var, value] : lhs.bindings_) {
    const Term* other = rhs.lookup(var);
    if (other == nullptr || !(lhs.apply(value) == rhs.apply(*other))) {
      return false;
    }
  }
  return true;
}

}  // namespace fallacy::logic
