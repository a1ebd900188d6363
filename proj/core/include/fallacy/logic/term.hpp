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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fallacy::logic {

/// A logic variable. Variables read from source text have `scope == 0`; the
/// solver renames clause variables apart by giving each clause use a fresh
/// non-zero scope.
struct Variable {
  std::string name;
  std::uint32_t scope = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct Atom {
  std::string name;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Int {
  std::int64_t value = 0;

  friend bool operator==(const Int&, const Int&) = default;
};

class Term;

struct Compound {
  std::string functor;
  std::vector<Term> args;
  bool ground = true;
};

/// Immutable first-order term: variable, atom, integer or compound.
///
/// Terms are cheap to copy; compound bodies are shared.
class Term {
 public:
  /// Defaults to the atom `nil` so containers of terms are usable.
  Term();

  static Term var(std::string name, std::uint32_t scope = 0);
  static Term atom(std::string name);
  static Term integer(std::int64_t value);
  /// Throws std::invalid_argument when `args` is empty or the functor is not
  /// a valid atom name.
  static Term compound(std::string functor, std::vector<Term> args);

  [[nodiscard]] bool is_var() const noexcept {
    return std::holds_alternative<Variable>(node_);
  }
  [[nodiscard]] bool is_atom() const noexcept {
    return std::holds_alternative<Atom>(node_);
  }
  [[nodiscard]] bool is_int() const noexcept {
    return std::holds_alternative<Int>(node_);
  }
  [[nodiscard]] bool is_compound() const noexcept {
    return std::holds_alternative<CompoundPtr>(node_);
  }
  /// Atoms and compounds can be called as goals.
  [[nodiscard]] bool is_callable() const noexcept {
    return is_atom() || is_compound();
  }

  [[nodiscard]] const Variable& as_var() const { return std::get<Variable>(node_); }
  [[nodiscard]] const Atom& as_atom() const { return std::get<Atom>(node_); }
  [[nodiscard]] const Int& as_int() const { return std::get<Int>(node_); }
  [[nodiscard]] const Compound& as_compound() const {
    return *std::get<CompoundPtr>(node_);
  }

  /// Functor name of a compound or name of an atom. Empty otherwise.
  [[nodiscard]] std::string_view name() const noexcept;
  /// Number of arguments; 0 for anything but compounds.
  [[nodiscard]] std::size_t arity() const noexcept;
  /// Arguments of a compound; empty for other terms.
  [[nodiscard]] const std::vector<Term>& args() const noexcept;

  [[nodiscard]] bool is_ground() const noexcept;

  /// Appends the distinct variables of this term in first-occurrence order.
  void collect_variables(std::vector<Variable>& out) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Term& lhs, const Term& rhs);

 private:
  using CompoundPtr = std::shared_ptr<const Compound>;
  using Node = std::variant<Variable, Atom, Int, CompoundPtr>;

  explicit Term(Node node) : node_(std::move(node)) {}

  Node node_;
};

/// Predicate identity: name plus arity.
struct PredicateKey {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateKey&, const PredicateKey&) = default;
  friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;

  [[nodiscard]] std::string to_string() const {
    return name + "/" + std::to_string(arity);
  }
};

/// Key of a callable term. Undefined for variables and integers.
[[nodiscard]] PredicateKey key_of(const Term& callable);

[[nodiscard]] bool is_valid_atom_name(std::string_view name) noexcept;
[[nodiscard]] bool is_valid_variable_name(std::string_view name) noexcept;

/// True when the two terms are equal up to a consistent one-to-one renaming
/// of variables.
[[nodiscard]] bool is_variant(const Term& lhs, const Term& rhs);

}  // namespace fallacy::logic

template <>
struct std::hash<fallacy::logic::PredicateKey> {
  std::size_t operator()(const fallacy::logic::PredicateKey& key) const noexcept {
    return std::hash<std::string>{}(key.name) * 31 + key.arity;
  }
};
