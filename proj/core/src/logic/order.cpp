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

#include "fallacy/logic/order.hpp"

namespace fallacy::logic {
namespace {

int type_rank(const Term& term) {
  if (term.is_var()) return 0;
  if (term.is_int()) return 1;
  if (term.is_atom()) return 2;
  return 3;
}

}  // namespace

std::strong_ordering compare_terms(const Term& lhs, const Term& rhs) {
  if (auto c = type_rank(lhs) <=> type_rank(rhs); c != 0) return c;
  if (lhs.is_var()) return lhs.as_var() <=> rhs.as_var();
  if (lhs.is_int()) return lhs.as_int().value <=> rhs.as_int().value;
  if (lhs.is_atom()) {
    // std::string's <=> is weak in libstdc++ 11; compare() gives a total order.
    const int c = lhs.as_atom().name.compare(rhs.as_atom().name);
    return c <=> 0;
  }
  if (auto c = lhs.arity() <=> rhs.arity(); c != 0) return c;
  if (const int c = lhs.name().compare(rhs.name()); c != 0) return c <=> 0;
  for (std::size_t i = 0; i < lhs.arity(); ++i) {
    if (auto c = compare_terms(lhs.args()[i], rhs.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace fallacy::logic
