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

#include "fallacy/logic/unify.hpp"

namespace fallacy::logic {

bool occurs_in(const Variable& var, const Term& term, const Substitution& subst) {
  Term resolved = subst.walk(term);
  if (resolved.is_var()) return resolved.as_var() == var;
  if (!resolved.is_compound() || resolved.is_ground()) return false;
  for (const auto& arg : resolved.args()) {
    if (occurs_in(var, arg, subst)) return true;
  }
  return false;
}

bool unify_in_place(const Term& lhs, const Term& rhs, Substitution& subst,
                    std::vector<Variable>& trail) {
  Term a = subst.walk(lhs);
  Term b = subst.walk(rhs);
  if (a.is_var() && b.is_var() && a.as_var() == b.as_var()) return true;
  if (a.is_var()) {
    if (occurs_in(a.as_var(), b, subst)) return false;
    subst.bind(a.as_var(), b);
    trail.push_back(a.as_var());
    return true;
  }
  if (b.is_var()) {
    if (occurs_in(b.as_var(), a, subst)) return false;
    subst.bind(b.as_var(), a);
    trail.push_back(b.as_var());
    return true;
  }
  if (a.is_compound() && b.is_compound()) {
    if (a.arity() != b.arity() || a.name() != b.name()) return false;
    if (a.is_ground() && b.is_ground()) return a == b;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!unify_in_place(a.args()[i], b.args()[i], subst, trail)) return false;
    }
    return true;
  }
  return a == b;
}

std::optional<Substitution> unify(const Term& lhs, const Term& rhs,
                                  const Substitution& base) {
  Substitution result = base;
  std::vector<Variable> trail;
  if (!unify_in_place(lhs, rhs, result, trail)) return std::nullopt;
  return result;
}

}  // namespace fallacy::logic
