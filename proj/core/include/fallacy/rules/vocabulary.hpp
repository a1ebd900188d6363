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
#include <span>
#include <string_view>

#include "fallacy/logic/term.hpp"

namespace fallacy::rules {

/// One base predicate of the fact vocabulary.
struct PredicateInfo {
  std::string_view notation;   // name used in fact files, e.g. "hr"
  std::string_view long_name;  // e.g. "has_rule"
  std::size_t arity;
  std::string_view description;

  [[nodiscard]] logic::PredicateKey key() const {
    return logic::PredicateKey{std::string(notation), arity};
  }
};

/// The 24 base predicates.
[[nodiscard]] std::span<const PredicateInfo> vocabulary() noexcept;

/// Lookup by notation or long name.
[[nodiscard]] const PredicateInfo* find_predicate(std::string_view name) noexcept;

}  // namespace fallacy::rules
