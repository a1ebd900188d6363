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

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "fallacy/logic/term.hpp"

namespace fallacy::logic {

/// Variable bindings kept in triangular form; `apply` resolves chains, so the
/// applied view is idempotent regardless of binding order.
class Substitution {
 public:
  Substitution() = default;

  [[nodiscard]] const Term* lookup(const Variable& var) const;
  /// Binds an unbound variable. No occurs-check here; `unify` does that.
  void bind(const Variable& var, Term value);
  void unbind(const Variable& var);

  /// Dereferences variable chains at the top level only.
  [[nodiscard]] Term walk(const Term& term) const;
  /// Fully resolves every bound variable inside `term`.
  [[nodiscard]] Term apply(const Term& term) const;

  /// Applied bindings for `vars` that are bound; unbound ones are omitted.
  [[nodiscard]] Substitution restricted_to(std::span<const Variable> vars) const;

  [[nodiscard]] bool empty() const noexcept { return bindings_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return bindings_.size(); }
  [[nodiscard]] const std::map<Variable, Term>& bindings() const noexcept {
    return bindings_;
  }

  /// `{X ↦ john, Y ↦ mary}` in variable order.
  [[nodiscard]] std::string to_string() const;

  /// Equal when both resolve every bound variable to the same term.
  friend bool operator==(const Substitution& lhs, const Substitution& rhs);

 private:
  std::map<Variable, Term> bindings_;
};

}  // namespace fallacy::logic
