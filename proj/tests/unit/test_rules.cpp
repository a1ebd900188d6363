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

#include <gtest/gtest.h>

#include <random>

#include "fallacy/error.hpp"
#include "fallacy/kb/parser.hpp"
#include "fallacy/kb/seeds.hpp"
#include "fallacy/rules/derive.hpp"
#include "fallacy/rules/schema.hpp"
#include "fallacy/rules/validate.hpp"
#include "fallacy/rules/vocabulary.hpp"
#include "oracle.hpp"

namespace fallacy::rules {
namespace {

using kb::KnowledgeBase;

KnowledgeBase sealed(std::string_view text) {
  auto kb = KnowledgeBase::parse(text);
  kb.seal();
  return kb;
}

std::vector<std::string> derived(FallacyCode code, std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : derive_instances(code, sealed(text))) out.push_back(t.to_string());
  return out;
}

TEST(Codes, FourteenWithElevenSchemas) {
  EXPECT_EQ(kAllCodes.size(), 14u);
  EXPECT_EQ(std::count_if(kAllCodes.begin(), kAllCodes.end(), has_schema), 11);
  for (auto code : kAllCodes) {
    EXPECT_EQ(parse_code(code_name(code)), code);
    EXPECT_EQ(parse_code(full_name(code)), code);
    EXPECT_FALSE(definition(code).empty());
  }
}

TEST(Codes, Aliases) {
  EXPECT_EQ(parse_code("AC"), FallacyCode::AF);
  EXPECT_EQ(parse_code("accident"), FallacyCode::AF);
  EXPECT_EQ(parse_code("false premise"), FallacyCode::FP);
  EXPECT_EQ(parse_code("Equivocation (EC)"), FallacyCode::EC);
  EXPECT_FALSE(parse_code("red herring"));
  EXPECT_THROW((void)require_code("nope"), InputError);
}

TEST(Schema, ArityMap) {
  const std::map<FallacyCode, std::size_t> expected = {
      {FallacyCode::ID, 4}, {FallacyCode::FA, 4}, {FallacyCode::FP, 5}, {FallacyCode::AF, 4},
      {FallacyCode::FC, 3}, {FallacyCode::BQ, 2}, {FallacyCode::CT, 2}, {FallacyCode::IE, 2},
      {FallacyCode::IT, 2}, {FallacyCode::WD, 2}, {FallacyCode::FS, 2}};
  for (const auto& [code, arity] : expected) {
    EXPECT_EQ(schema_for(code).arity(), arity) << code_name(code);
    EXPECT_EQ(schema_for(code).query_head.name(), "pd");
  }
}

TEST(Schema, LabelOnlyCodesHaveNoSchema) {
  EXPECT_THROW((void)schema_for(FallacyCode::EC), UnknownSchemaError);
  EXPECT_THROW((void)schema_for(FallacyCode::NF), UnknownSchemaError);
  EXPECT_THROW((void)schema_for(FallacyCode::FD), UnknownSchemaError);
}

TEST(Schema, BodyPredicatesComeFromVocabulary) {
  EXPECT_EQ(vocabulary().size(), 24u);
  for (auto code : kSchemaCodes) {
    const auto& schema = schema_for(code);
    for (const auto& rule : schema.rules) {
      for (const auto& lit : rule.body) {
        if (!lit.is_goal()) continue;
        const auto key = logic::key_of(lit.goal_term());
        const bool aux = std::find(schema.auxiliary_heads.begin(), schema.auxiliary_heads.end(),
                                   key) != schema.auxiliary_heads.end();
        const auto* info = find_predicate(key.name);
        EXPECT_TRUE(aux || (info != nullptr && info->arity == key.arity))
            << code_name(code) << " " << key.to_string();
      }
    }
  }
  EXPECT_TRUE(schema_for(FallacyCode::FS).uses_term_order());
  EXPECT_FALSE(schema_for(FallacyCode::AF).uses_term_order());
}

TEST(Schema, CatalogReparses) {
  const auto program = kb::parse_program(export_catalog());
  std::size_t heads = 0;
  for (const auto& p : program) heads += p.clause.head.name() == "pd" ? 1 : 0;
  EXPECT_EQ(heads, 11u);
}

TEST(Derive, DocumentedExamples) {
  EXPECT_EQ(derived(FallacyCode::ID,
                    "he(brush_teeth, 2_mins, teeth_health_for_that_day).\n"
                    "he(brush_teeth, 14_mins, teeth_health_for_one_week).\n"
                    "vc(2_mins, repeat_7_times_in_one_go, 14_mins).\n"),
            std::vector<std::string>{
                "pd(2_mins, 14_mins, teeth_health_for_that_day, teeth_health_for_one_week)"});
  EXPECT_EQ(derived(FallacyCode::FA,
                    "hp(kid, kid_word).\nhp(kidney, kid_word).\nhp(kid, grow_into_adult).\n"),
            std::vector<std::string>{"pd(kid, kidney, kid_word, grow_into_adult)"});
  EXPECT_EQ(derived(FallacyCode::IT, "im(rainy_days, wet_ground).\nim(sprinklers_on, wet_ground).\n"),
            (std::vector<std::string>{"pd(rainy_days, wet_ground)", "pd(sprinklers_on, wet_ground)"}));
  EXPECT_EQ(derived(FallacyCode::WD, "cs(move_eye_close_to_mirror, mirror_looks_like_eye).\n"),
            std::vector<std::string>{"pd(mirror_looks_like_eye, move_eye_close_to_mirror)"});
}

TEST(Derive, OrderCheckRejectsDocumentedFsTuple) {
  const auto kb = sealed(
      "ha(room_event, lightbulb_switch).\nha(room_event, darkness_emission).\n"
      "rc(absence_of_light, darkness_emission).\n");
  EXPECT_TRUE(derive_instances(FallacyCode::FS, kb).empty());
  const auto diagnostic = diagnose_ordering(FallacyCode::FS, kb);
  ASSERT_TRUE(diagnostic);
  std::vector<std::string> rejected;
  for (const auto& t : diagnostic->rejected) rejected.push_back(t.to_string());
  EXPECT_NE(std::find(rejected.begin(), rejected.end(), "pd(lightbulb_switch, darkness_emission)"),
            rejected.end());
  EXPECT_FALSE(diagnose_ordering(FallacyCode::AF, kb));
}

TEST(Derive, FsOrderHoldsForSortedSpelling) {
  EXPECT_EQ(derived(FallacyCode::FS,
                    "ha(room_event, a_switch).\nha(room_event, b_dark).\nrc(no_light, b_dark).\n"),
            std::vector<std::string>{"pd(a_switch, b_dark)"});
}

TEST(Derive, DeduplicatesInFirstOccurrenceOrder) {
  const auto kb = sealed("hr(o, r).\nhr(o, r).\nrri(r, i).\nrui(r, k).\nrui(r, j).\n");
  EXPECT_EQ(derive_raw(FallacyCode::AF, kb).size(), 4u);
  std::vector<std::string> got;
  for (const auto& t : derive_instances(FallacyCode::AF, kb)) got.push_back(t.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"pd(o, r, i, k)", "pd(o, r, i, j)"}));
}

TEST(Derive, RequiresSealedKb) {
  auto kb = KnowledgeBase::parse("hr(o, r).\n");
  EXPECT_THROW((void)derive_instances(FallacyCode::AF, kb), PreconditionError);
}

TEST(Derive, ArityMismatchIsSignatureError) {
  EXPECT_THROW((void)derived(FallacyCode::FC, "hp(kid).\n"), SignatureError);
}

TEST(Derive, CyclicImTerminates) {
  const auto kb = sealed("im(a, b).\nim(b, a).\nim(c, b).\nim(b, c).\nim(d, b).\n");
  std::vector<ValidTuple> tuples;
  EXPECT_NO_THROW(tuples = derive_instances(FallacyCode::IT, kb));
  const auto facts = testing::facts_of(kb);
  EXPECT_EQ(tuples.size(), testing::oracle_tuples(FallacyCode::IT, facts).size());
}

// Every tuple the engine derives satisfies its body under the reference
// evaluator, and randomized ground kbs never flounder.
TEST(Derive, DoubleEntryOnRandomKbs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    const auto code = kSchemaCodes[static_cast<std::size_t>(i) % kSchemaCodes.size()];
    testing::RandomKbOptions options;
    options.cyclic_im = i % 3 == 0 && (code == FallacyCode::IT || code == FallacyCode::IE);
    const auto facts = testing::random_facts({code}, rng, options);
    const auto kb = sealed(testing::program_text(facts));
    std::vector<ValidTuple> tuples;
    ASSERT_NO_THROW(tuples = derive_instances(code, kb)) << testing::program_text(facts);
    for (const auto& t : tuples) {
      std::vector<std::string> args;
      for (const auto& a : t.args) args.push_back(a.to_string());
      EXPECT_TRUE(testing::oracle_holds(code, args, facts)) << t.to_string();
      EXPECT_TRUE(t.to_term().is_ground());
      EXPECT_EQ(t.args.size(), schema_for(code).arity());
    }
  }
}

// Adding facts never removes a tuple from a schema without negation.
TEST(Derive, PositiveSchemasAreMonotone) {
  std::mt19937_64 rng(5);
  for (auto code : {FallacyCode::FP, FallacyCode::FC, FallacyCode::BQ, FallacyCode::CT}) {
    for (int i = 0; i < 50; ++i) {
      auto facts = testing::random_facts({code}, rng);
      const auto before = derive_instances(code, sealed(testing::program_text(facts)));
      auto extra = testing::random_facts({code, FallacyCode::AF}, rng);
      facts.insert(facts.end(), extra.begin(), extra.end());
      const auto after = derive_instances(code, sealed(testing::program_text(facts)));
      for (const auto& t : before) {
        EXPECT_NE(std::find(after.begin(), after.end(), t), after.end()) << t.to_string();
      }
    }
  }
}

TEST(Validate, RequiredPredicateEmpty) {
  const auto kb = sealed("hp(chimney, survives_fire).\nipo(chimney, building).\n");
  const auto report = validate_kb_against_schema(FallacyCode::FC, kb);
  ASSERT_TRUE(report.has(FindingKind::kRequiredEmpty));
  EXPECT_NE(report.to_string().find("lp/2"), std::string::npos);
}

TEST(Validate, ArityMismatch) {
  const auto program = kb::parse_program("hp(kid).\n");
  const auto report = validate_program(program, FallacyCode::FA);
  EXPECT_TRUE(report.has(FindingKind::kArityMismatch));
  EXPECT_EQ(report.findings[0].line, 1u);
}

TEST(Validate, SeedsAreClean) {
  for (auto code : kSchemaCodes) {
    const auto report = validate_kb_against_schema(code, kb::load_seed(code));
    EXPECT_TRUE(report.clean()) << code_name(code) << ": " << report.to_string();
  }
}

TEST(Validate, UnknownAndNonGround) {
  const auto report = validate_program(kb::parse_program("zz(a).\nhr(X, b).\n"), std::nullopt);
  EXPECT_TRUE(report.has(FindingKind::kUnknownPredicate));
  EXPECT_TRUE(report.has(FindingKind::kNonGroundFact));
  EXPECT_FALSE(report.has(FindingKind::kRequiredEmpty));
}

}  // namespace
}  // namespace fallacy::rules
