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

#include "fallacy/kb/knowledge_base.hpp"

#include <algorithm>

#include "fallacy/error.hpp"
#include "fallacy/io.hpp"
#include "fallacy/kb/serialize.hpp"

namespace fallacy::kb {

KnowledgeBase KnowledgeBase::from_program(std::span<const ParsedClause> program) {
  KnowledgeBase kb;
  for (const auto& parsed : program) {
    if (parsed.clause.is_fact()) {
      if (!parsed.clause.head.is_ground()) {
        throw GroundnessError("line " + std::to_string(parsed.line) +
                              ": fact is not ground: " + parsed.clause.to_string());
      }
      kb.add_fact(FactRecord{parsed.clause, parsed.comment, parsed.group_id});
    } else {
      kb.assertz(parsed.clause);
    }
  }
  return kb;
}

KnowledgeBase KnowledgeBase::parse(std::string_view text) {
  return from_program(parse_program(text));
}

KnowledgeBase KnowledgeBase::load_file(const std::filesystem::path& path) {
  return parse(read_file_bytes(path, "knowledge base"));
}

void KnowledgeBase::check_open() const {
  if (sealed_) throw SealedError("knowledge base is sealed");
}

void KnowledgeBase::assertz(logic::Clause clause,
                            std::optional<std::string> comment,
                            std::optional<std::size_t> group) {
  check_open();
  if (clause.is_fact()) {
    const std::size_t g =
        group.value_or(facts_.empty() ? 0 : facts_.back().group_id);
    add_fact(FactRecord{std::move(clause), std::move(comment), g});
    return;
  }
  store_.add(clause);
  rules_.push_back(std::move(clause));
}

void KnowledgeBase::add_fact(FactRecord record) {
  check_open();
  if (!record.clause.is_fact()) {
    throw PreconditionError("add_fact given a rule: " + record.clause.to_string());
  }
  if (!record.clause.head.is_ground()) {
    throw GroundnessError("fact is not ground: " + record.clause.to_string());
  }
  store_.add(record.clause);
  facts_.push_back(std::move(record));
}

void KnowledgeBase::mark_loop_checked(logic::PredicateKey key) {
  check_open();
  store_.mark_loop_checked(std::move(key));
}

std::size_t KnowledgeBase::fact_count(const logic::PredicateKey& key) const {
  return static_cast<std::size_t>(
      std::count_if(facts_.begin(), facts_.end(),
                    [&](const FactRecord& f) { return f.clause.key() == key; }));
}

std::vector<logic::PredicateKey> KnowledgeBase::fact_predicates() const {
  std::vector<logic::PredicateKey> out;
  for (const auto& f : facts_) {
    auto key = f.clause.key();
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
  }
  return out;
}

std::size_t KnowledgeBase::next_group_id() const noexcept {
  std::size_t next = 0;
  for (const auto& f : facts_) next = std::max(next, f.group_id + 1);
  return next;
}

std::span<const logic::Clause* const> KnowledgeBase::clauses_for(
    const logic::PredicateKey& key) const {
  return store_.clauses_for(key);
}

bool KnowledgeBase::is_loop_checked(const logic::PredicateKey& key) const {
  return store_.is_loop_checked(key);
}

std::vector<ParsedClause> KnowledgeBase::to_program() const {
  std::vector<ParsedClause> out;
  out.reserve(facts_.size() + rules_.size());
  for (const auto& f : facts_) out.push_back(ParsedClause{f.clause, f.comment, f.group_id, 0});
  const std::size_t rule_group = next_group_id();
  for (const auto& r : rules_) out.push_back(ParsedClause{r, std::nullopt, rule_group, 0});
  return out;
}

std::string KnowledgeBase::serialize() const {
  const auto program = to_program();
  return serialize_program(program);
}

}  // namespace fallacy::kb
