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

#include <compare>

#include "fallacy/logic/term.hpp"

namespace fallacy::logic {

/// Standard order of terms: Variable < Int < Atom < Compound. Integers by
/// value, atoms lexicographically, compounds by arity, then functor name,
/// then arguments left to right. Variables order by name, then scope.
[[nodiscard]] std::strong_ordering compare_terms(const Term& lhs, const Term& rhs);

}  // namespace fallacy::logic
