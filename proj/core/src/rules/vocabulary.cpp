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

#include "fallacy/rules/vocabulary.hpp"

#include <array>

namespace fallacy::rules {
namespace {

constexpr std::array<PredicateInfo, 24> kVocabulary = {{
    {"he", "has_effect", 3, "action A carried on for duration D produces effect E"},
    {"vc", "valid_accumulate", 3,
     "repeating an action of duration U under condition R sums to duration T"},
    {"ef", "established_fact", 2, "condition C establishes fact F"},
    {"fp", "false_premise", 2, "fact F rests on false premise P"},
    {"po", "plausible_observation", 2,
     "true observation O appears to support premise P"},
    {"fplc", "false_premise_lead_conclusion", 3,
     "premise P together with observation O yields wrong conclusion G"},
    {"hr", "has_rule", 2, "object O carries instruction or rule R"},
    {"rui", "rule_unreasonable_interpretation", 2,
     "rule R admits the unreasonable reading I"},
    {"rri", "rule_reasonable_interpretation", 2,
     "rule R admits the reasonable reading I"},
    {"hp", "has_property", 2, "component C has property P"},
    {"ipo", "is_part_of", 2, "component C belongs to whole W"},
    {"lp", "lacks_property", 2, "whole W does not have property P"},
    {"ca", "claim_and_argument", 2, "argument A is offered for claim C"},
    {"ema", "explicit_meaning_of_argument", 2, "argument A spells out meaning E"},
    {"emrc", "explicit_meaning_rely_on_claim", 2,
     "meaning E depends on claim C being true"},
    {"qc", "quote_context", 2, "quote Q originally means M"},
    {"qoc", "quote_out_of_context", 2, "quote Q is misread as M"},
    {"froc", "fact_related_out_of_context", 2,
     "misreading M gets tied to unrelated fact F"},
    {"ifqoc", "improper_fact_quote_out_of_context", 2,
     "fact F is taken to support conclusion G"},
    {"cc", "complement_cases", 2, "cases A and B are complements"},
    {"im", "implies", 2, "condition C implies R"},
    {"cs", "cause", 2, "A directly brings about B"},
    {"ha", "happen_at", 2, "event E occurs in scenario T"},
    {"rc", "real_cause", 2, "effect E is actually produced by C"},
}};

}  // namespace

std::span<const PredicateInfo> vocabulary() noexcept { return kVocabulary; }

const PredicateInfo* find_predicate(std::string_view name) noexcept {
  for (const auto& p : kVocabulary) {
    if (p.notation == name || p.long_name == name) return &p;
  }
  return nullptr;
}

}  // namespace fallacy::rules
