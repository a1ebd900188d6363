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
#include <vector>

#include "fallacy/logic/substitution.hpp"
#include "fallacy/logic/term.hpp"

namespace fallacy::logic {

/// Most general unifier of `lhs` and `rhs` extending `base`, with
/// occurs-check. Absent when the terms do not unify.
[[nodiscard]] std::optional<Substitution> unify(const Term& lhs, const Term& rhs,
                                                const Substitution& base = {});

/// In-place variant used by the solver. Every new binding is appended to
/// `trail` so the caller can undo it; on failure the bindings made so far are
/// left in place for the caller to unwind.
bool unify_in_place(const Term& lhs, const Term& rhs, Substitution& subst,
                    std::vector<Variable>& trail);

[[nodiscard]] bool occurs_in(const Variable& var, const Term& term,
                             const Substitution& subst);

}  // namespace fallacy::logic
