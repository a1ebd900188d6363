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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/kb/parser.hpp"
#include "fallacy/logic/database.hpp"

namespace fallacy::kb {

/// A ground fact with its inline annotation and instance group.
struct FactRecord {
  logic::Clause clause;
  std::optional<std::string> comment;
  std::size_t group_id = 0;

  friend bool operator==(const FactRecord&, const FactRecord&) = default;
};

/// Facts and rules in insertion order. Mutable until `seal()`, immutable and
/// safe to share between threads afterwards.
class KnowledgeBase : public logic::ClauseDatabase {
 public:
  KnowledgeBase() = default;

  /// Loads every clause of a parsed program; facts keep their group ids.
  static KnowledgeBase from_program(std::span<const ParsedClause> program);
  static KnowledgeBase parse(std::string_view text);
  /// Throws InputError when the file cannot be read.
  static KnowledgeBase load_file(const std::filesystem::path& path);

  /// Appends a clause. A fact joins `group` when given, else the group of
  /// the previous fact. Throws SealedError once sealed and GroundnessError
  /// for a fact with variables.
  void assertz(logic::Clause clause,
               std::optional<std::string> comment = std::nullopt,
               std::optional<std::size_t> group = std::nullopt);
  void add_fact(FactRecord record);
  void mark_loop_checked(logic::PredicateKey key);

  void seal() noexcept { sealed_ = true; }
  [[nodiscard]] bool sealed() const noexcept { return sealed_; }

  [[nodiscard]] const std::vector<FactRecord>& facts() const noexcept {
    return facts_;
  }
  [[nodiscard]] const std::vector<logic::Clause>& rules() const noexcept {
    return rules_;
  }
  [[nodiscard]] bool empty() const noexcept {
    return facts_.empty() && rules_.empty();
  }
  [[nodiscard]] std::size_t fact_count(const logic::PredicateKey& key) const;
  /// Distinct fact predicates in first-appearance order.
  [[nodiscard]] std::vector<logic::PredicateKey> fact_predicates() const;
  /// One past the largest group id in use.
  [[nodiscard]] std::size_t next_group_id() const noexcept;

  [[nodiscard]] std::span<const logic::Clause* const> clauses_for(
      const logic::PredicateKey& key) const override;
  [[nodiscard]] bool is_loop_checked(const logic::PredicateKey& key) const override;

  /// Facts grouped by blank lines, then rules.
  [[nodiscard]] std::string serialize() const;
  [[nodiscard]] std::vector<ParsedClause> to_program() const;

 private:
  void check_open() const;

  std::vector<FactRecord> facts_;
  std::vector<logic::Clause> rules_;
  logic::ClauseStore store_;
  bool sealed_ = false;
};

}  // namespace fallacy::kb
