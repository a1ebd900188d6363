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

#include <deque>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "fallacy/logic/clause.hpp"

namespace fallacy::logic {

/// Read-only clause lookup consumed by the solver.
class ClauseDatabase {
 public:
  virtual ~ClauseDatabase() = default;

  /// Clauses whose head has this predicate, in insertion order.
  [[nodiscard]] virtual std::span<const Clause* const> clauses_for(
      const PredicateKey& key) const = 0;

  /// Predicates whose calls are pruned when they repeat an ancestor call
  /// (a visited set for recursive closure rules).
  [[nodiscard]] virtual bool is_loop_checked(const PredicateKey& key) const {
    (void)key;
    return false;
  }
};

/// Insertion-ordered clause storage with a per-predicate index. Copying
/// rebuilds the index so copies never alias each other's storage.
class ClauseStore : public ClauseDatabase {
 public:
  ClauseStore() = default;
  ClauseStore(const ClauseStore& other);
  ClauseStore& operator=(const ClauseStore& other);
  ClauseStore(ClauseStore&&) noexcept = default;
  ClauseStore& operator=(ClauseStore&&) noexcept = default;

  /// Returns a stable reference to the stored clause.
  const Clause& add(Clause clause);
  void mark_loop_checked(PredicateKey key);

  [[nodiscard]] std::span<const Clause* const> clauses_for(
      const PredicateKey& key) const override;
  [[nodiscard]] bool is_loop_checked(const PredicateKey& key) const override;

  [[nodiscard]] const std::deque<Clause>& clauses() const noexcept {
    return clauses_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return clauses_.size(); }
  [[nodiscard]] bool defines(const PredicateKey& key) const;

 private:
  std::deque<Clause> clauses_;
  std::map<PredicateKey, std::vector<const Clause*>> index_;
  std::set<PredicateKey> loop_checked_;
};

}  // namespace fallacy::logic
