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

#include "fallacy/logic/database.hpp"

namespace fallacy::logic {

ClauseStore::ClauseStore(const ClauseStore& other)
    : loop_checked_(other.loop_checked_) {
  for (const auto& clause : other.clauses_) add(clause);
}

ClauseStore& ClauseStore::operator=(const ClauseStore& other) {
  if (this != &other) {
    ClauseStore copy(other);
    *this = std::move(copy);
  }
  return *this;
}

const Clause& ClauseStore::add(Clause clause) {
  const Clause& stored = clauses_.emplace_back(std::move(clause));
  index_[stored.key()].push_back(&stored);
  return stored;
}

void ClauseStore::mark_loop_checked(PredicateKey key) {
  loop_checked_.insert(std::move(key));
}

std::span<const Clause* const> ClauseStore::clauses_for(
    const PredicateKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

bool ClauseStore::is_loop_checked(const PredicateKey& key) const {
  return loop_checked_.contains(key);
}

bool ClauseStore::defines(const PredicateKey& key) const {
  return index_.contains(key);
}

}  // namespace fallacy::logic
