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

#include <nlohmann/json.hpp>

#include <thread>
#include <vector>

#include "fallacy/error.hpp"
#include "fallacy/kb/seeds.hpp"
#include "fallacy/llm/cassette.hpp"
#include "fallacy/llm/gateway.hpp"
#include "fallacy/llm/prompt.hpp"
#include "fallacy/llm/provider_config.hpp"
#include "fallacy/llm/response_parsing.hpp"
#include "fallacy/llm/retry.hpp"
#include "fallacy/rules/validate.hpp"
#include "scripted_backend.hpp"

namespace fallacy::llm {
namespace {

using rules::FallacyCode;
using testing::ScriptedBackend;

std::string af_group(int i) {
  const std::string n = std::to_string(i);
  return "hr(sign_" + n + ", rule_" + n + ").  % sign " + n + " states a rule\n" +
         "rri(rule_" + n + ", sensible_" + n + ").  % reasonable reading\n" +
         "rui(rule_" + n + ", literal_" + n + ").  % overly literal reading\n";
}

std::string af_groups(int from, int to) {
  std::string out;
  for (int i = from; i < to; ++i) out += (i > from ? "\n" : "") + af_group(i);
  return out;
}

GatewayOptions options() {
  GatewayOptions o;
  o.generator_model = "gen";
  o.evaluator_model = "eval";
  return o;
}

std::vector<rules::ValidTuple> af_tuples(int n) {
  std::vector<rules::ValidTuple> out;
  for (int i = 0; i < n; ++i) {
    const std::string s = std::to_string(i);
    out.push_back({FallacyCode::AF,
                   {logic::Term::atom("o" + s), logic::Term::atom("r" + s),
                    logic::Term::atom("i" + s), logic::Term::atom("k" + s)}});
  }
  return out;
}

TEST(Prompt, RenderBindsEveryPlaceholder) {
  const auto& t = prompt_template(PromptId::kGenFacts);
  const auto names = t.placeholders();
  EXPECT_EQ(names, (std::vector<std::string>{"count", "fallacy_type", "Prolog_Facts", "Prolog_rule"}));
  EXPECT_THROW((void)t.render({{"count", "20"}}), PreconditionError);
  const auto rendered = t.render({{"count", "20"},
                                  {"fallacy_type", "Accident Fallacy"},
                                  {"Prolog_Facts", "hr(a, b)."},
                                  {"Prolog_rule", "pd(O, R, I, K) :- hr(O, R)."}});
  EXPECT_EQ(rendered.system.find("generate 20 new Accident Fallacy prolog knowledge combinations"),
            0u);
  EXPECT_NE(rendered.user.find("hr(a, b)."), std::string::npos);
}

TEST(Prompt, JudgeKeepsLiteralJsonBraces) {
  const auto rendered = prompt_template(PromptId::kJudge)
                            .render({{"All_Logical_Fallacies_Definitions", all_definitions_block()},
                                     {"sentence", "Since a, therefore b."}});
  EXPECT_NE(rendered.user.find("{\n  \"sentence\""), std::string::npos);
  for (auto code : rules::kAllCodes) {
    EXPECT_NE(rendered.system.find("(" + std::string(rules::code_name(code)) + ")"),
              std::string::npos);
  }
}

TEST(Fingerprint, StableAndSensitive) {
  ChatRequest a{"m", 0.0, "sys", "user", 100};
  ChatRequest b = a;
  b.max_tokens = 5;
  EXPECT_EQ(request_fingerprint(a), request_fingerprint(b));
  EXPECT_EQ(request_fingerprint(a).size(), 64u);
  b = a;
  b.user = "user!";
  EXPECT_NE(request_fingerprint(a), request_fingerprint(b));
  b = a;
  b.temperature = 0.5;
  EXPECT_NE(request_fingerprint(a), request_fingerprint(b));
}

TEST(Cassette, RecordThenReplay) {
  ScriptedBackend inner(std::vector<std::string>{"one", "two", "three"});
  RecordingBackend recorder(inner);
  ChatRequest a{"m", 0.0, "s", "a", 10};
  ChatRequest b{"m", 0.0, "s", "b", 10};
  EXPECT_EQ(recorder.complete(a), "one");
  EXPECT_EQ(recorder.complete(b), "two");
  EXPECT_EQ(recorder.complete(a), "three");

  const auto cassette = Cassette::parse(recorder.cassette().serialize());
  ASSERT_EQ(cassette.entries().size(), 3u);
  ReplayBackend replay(cassette);
  EXPECT_EQ(replay.complete(b), "two");
  EXPECT_EQ(replay.complete(a), "one");
  EXPECT_EQ(replay.complete(a), "three");
  EXPECT_THROW((void)replay.complete(a), ReplayMissError);
  EXPECT_EQ(replay.remaining(), 0u);
}

TEST(Cassette, MalformedLine) {
  EXPECT_THROW((void)Cassette::parse("{\"fingerprint\": 1}\n"), InputError);
  EXPECT_THROW((void)Cassette::parse("not json\n"), InputError);
}

class FlakyBackend : public ChatBackend {
 public:
  explicit FlakyBackend(int failures) : failures_(failures) {}
  std::string complete(const ChatRequest&) override {
    if (failures_-- > 0) throw TransientProviderError("busy", std::chrono::milliseconds(2000));
    return "ok";
  }

 private:
  int failures_;
};

TEST(Retry, BacksOffThenSucceeds) {
  FlakyBackend inner(2);
  std::vector<std::chrono::milliseconds> sleeps;
  RetryingBackend retry(inner, RetryPolicy{3, std::chrono::milliseconds(100),
                                           std::chrono::milliseconds(1000), 0.0, 1},
                        [&](auto d) { sleeps.push_back(d); });
  EXPECT_EQ(retry.complete({}), "ok");
  EXPECT_EQ(retry.attempts(), 3u);
  EXPECT_EQ(retry.retries(), 2u);
  // Retry-After of two seconds outranks the computed delay.
  EXPECT_EQ(sleeps, (std::vector<std::chrono::milliseconds>{std::chrono::milliseconds(2000),
                                                            std::chrono::milliseconds(2000)}));
  EXPECT_EQ(retry.backoff(0), std::chrono::milliseconds(100));
  EXPECT_EQ(retry.backoff(1), std::chrono::milliseconds(200));
  EXPECT_EQ(retry.backoff(10), std::chrono::milliseconds(1000));
}

TEST(Retry, GivesUpAfterMaxRetries) {
  FlakyBackend inner(10);
  RetryingBackend retry(inner, RetryPolicy{2, std::chrono::milliseconds(1),
                                           std::chrono::milliseconds(1), 0.0, 1},
                        [](auto) {});
  EXPECT_THROW((void)retry.complete({}), ProviderError);
  EXPECT_EQ(retry.attempts(), 3u);
}

TEST(Parsing, Score) {
  EXPECT_EQ(extract_score("score: 3"), 3);
  EXPECT_EQ(extract_score("Score = 2 because"), 2);
  EXPECT_EQ(extract_score("I would give it a 1."), 1);
  EXPECT_FALSE(extract_score("great sentence!"));
  EXPECT_FALSE(extract_score("score: 7"));
}

TEST(Parsing, Sentences) {
  EXPECT_EQ(split_sentences("1. Since a, therefore b.\n\n2) \"Since c, therefore d.\"\n- e\n"),
            (std::vector<std::string>{"Since a, therefore b.", "Since c, therefore d.", "e"}));
}

TEST(Parsing, VerdictNegative) {
  const auto v = parse_verdict(
      R"({"sentence":"s","logic_error":"no","logic_fallacies":[],"details":"fine"})");
  EXPECT_FALSE(v.logic_error);
  EXPECT_TRUE(v.logic_fallacies.empty());
  EXPECT_EQ(v.details, "fine");
}

TEST(Parsing, VerdictAliasesKeepRank) {
  const auto v = parse_verdict(
      "```json\n{\"sentence\":\"s\",\"logic_error\":\"yes\","
      "\"logic_fallacies\":[\"False Premise\",\"Equivocation\"],\"details\":\"\"}\n```");
  EXPECT_TRUE(v.logic_error);
  EXPECT_EQ(v.logic_fallacies, (std::vector<FallacyCode>{FallacyCode::FP, FallacyCode::EC}));
  EXPECT_EQ(parse_verdict(R"({"logic_error":true,"logic_fallacies":"AC"})").logic_fallacies,
            std::vector<FallacyCode>{FallacyCode::AF});
}

TEST(Parsing, VerdictRejectsProseAndUnknownLabels) {
  EXPECT_THROW((void)parse_verdict("Sure! {\"logic_error\":\"no\"}"), JsonError);
  EXPECT_THROW((void)parse_verdict(R"({"logic_error":"no","logic_fallacies":["Red Herring"]})"),
               JsonError);
}

TEST(Config, ParsesSectionsAndDefaults) {
  const auto config = parse_gateway_config(
      "[generator]\nkind = anthropic\nmodel = big\ntemperature = 1.0\napi_key_env = KEY\n"
      "[run]\nbatch_size = 5\nseed = 9\n");
  EXPECT_EQ(config.generator.kind, ProviderKind::kAnthropic);
  EXPECT_EQ(config.generator.model_name, "big");
  EXPECT_EQ(config.evaluator.model_name, "big");
  EXPECT_EQ(config.batch_size, 5u);
  EXPECT_EQ(config.seed, 9u);
  ProviderConfig bad = config.generator;
  bad.temperature = 2.5;
  EXPECT_THROW(bad.validate(), InputError);
  EXPECT_THROW((void)parse_gateway_config("[run]\nbatch_size = 0\n"), InputError);
}

TEST(Gateway, GeneratesTwentyGroups) {
  ScriptedBackend backend(std::vector<std::string>{af_groups(0, 20)});
  Gateway gateway(backend, backend, options());
  const auto result = gateway.generate_facts(FallacyCode::AF, kb::load_seed(FallacyCode::AF), 20);
  EXPECT_EQ(result.records.size(), 60u);
  EXPECT_EQ(result.group_count(), 20u);
  EXPECT_TRUE(result.rejections.empty());
  EXPECT_EQ(result.records.back().group_id, 19u);
  EXPECT_EQ(backend.calls(), 1u);
  const auto req = backend.requests()[0];
  EXPECT_EQ(req.model, "gen");
  EXPECT_DOUBLE_EQ(req.temperature, 1.0);
  EXPECT_NE(req.user.find("hr(shampoo_bottle, lather_rinse_repeat)."), std::string::npos);
  EXPECT_NE(req.user.find("pd(O, R, I, K) :-"), std::string::npos);
}

TEST(Gateway, DropsMalformedGroup) {
  std::string text = af_groups(0, 19) + "\nhr(sign_x, rule_x\nrri(rule_x, s).\n";
  ScriptedBackend backend(std::vector<std::string>{text});
  Gateway gateway(backend, backend, options());
  const auto result = gateway.generate_facts(FallacyCode::AF, kb::load_seed(FallacyCode::AF), 20);
  EXPECT_EQ(result.group_count(), 19u);
  ASSERT_EQ(result.rejections.size(), 1u);
  kb::KnowledgeBase kb;
  for (const auto& r : result.records) kb.add_fact(r);
  EXPECT_TRUE(rules::validate_kb_against_schema(FallacyCode::AF, kb).clean());
}

TEST(Gateway, DropsGroupWithForeignPredicate) {
  ScriptedBackend backend(std::vector<std::string>{af_group(1) + "\nhr(a, b).\nzz(b, c).\n"});
  Gateway gateway(backend, backend, options());
  const auto result = gateway.generate_facts(FallacyCode::AF, kb::load_seed(FallacyCode::AF), 2);
  EXPECT_EQ(result.group_count(), 1u);
  EXPECT_EQ(result.rejections.size(), 1u);
}

TEST(Gateway, BatchesAndEmptyYield) {
  ScriptedBackend backend(std::vector<std::string>{af_groups(0, 2), af_groups(2, 4), af_group(4)});
  auto o = options();
  o.batch_size = 2;
  Gateway gateway(backend, backend, o);
  const auto seed = kb::load_seed(FallacyCode::AF);
  EXPECT_EQ(gateway.generate_facts(FallacyCode::AF, seed, 5).group_count(), 5u);
  EXPECT_EQ(backend.calls(), 3u);
  EXPECT_THROW((void)gateway.generate_facts(FallacyCode::AF, seed, 0), EmptyYieldError);

  ScriptedBackend junk(std::vector<std::string>{"I cannot help with that."});
  Gateway g2(junk, junk, options());
  EXPECT_THROW((void)g2.generate_facts(FallacyCode::AF, seed, 3), EmptyYieldError);
}

TEST(Gateway, TransformKeepsOrder) {
  ScriptedBackend backend(std::vector<std::string>{"1. first\n2. second\n3. third\n"});
  Gateway gateway(backend, backend, options());
  const auto tuples = af_tuples(3);
  const auto out = gateway.transform_to_sentences(tuples, std::vector<std::string>{"Since x."});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].text, "first");
  EXPECT_EQ(out[2].text, "third");
  EXPECT_EQ(out[1].code, FallacyCode::AF);
  EXPECT_NE(backend.requests()[0].user.find("2. pd(o1, r1, i1, k1)."), std::string::npos);
  EXPECT_THROW((void)gateway.transform_to_sentences({}, {}), PreconditionError);
}

TEST(Gateway, TransformCountMismatch) {
  ScriptedBackend fixed(std::vector<std::string>{"only one\n", "a\nb\n"});
  Gateway gateway(fixed, fixed, options());
  EXPECT_EQ(gateway.transform_to_sentences(af_tuples(2), {}).size(), 2u);
  EXPECT_EQ(gateway.request_counts().at("transform"), 2u);

  ScriptedBackend broken(std::vector<std::string>{"one\n", "still one\n"});
  Gateway g2(broken, broken, options());
  EXPECT_THROW((void)g2.transform_to_sentences(af_tuples(2), {}), CountMismatchError);
}

TEST(Gateway, ScoreTriples) {
  ScriptedBackend backend(std::vector<std::string>{"score: 3", "score: 3", "score: 3",
                                                   "score: 2", "Score: 3", "score:3"});
  Gateway gateway(backend, backend, options());
  EXPECT_EQ(gateway.score_sentence("s", FallacyCode::AF).mean(), 3);
  const auto t = gateway.score_sentence("s", FallacyCode::AF);
  EXPECT_EQ(t.mean(), boost::multiprecision::cpp_rational(8, 3));
  for (const auto& r : backend.requests()) {
    EXPECT_EQ(r.model, "eval");
    EXPECT_DOUBLE_EQ(r.temperature, 0.0);
  }
}

TEST(Gateway, ScoreUnparseable) {
  ScriptedBackend backend(std::vector<std::string>{"great sentence!", "great sentence!"});
  Gateway gateway(backend, backend, options());
  EXPECT_THROW((void)gateway.score_sentence("s", FallacyCode::AF), ScoreParseError);
}

TEST(Gateway, JudgeRepromptsOnce) {
  ScriptedBackend backend(std::vector<std::string>{
      "no json here", R"({"logic_error":"yes","logic_fallacies":["AC","NF"],"details":"d"})"});
  Gateway gateway(backend, backend, options());
  const auto v = gateway.judge_sentence("Since a, therefore b.");
  EXPECT_EQ(v.sentence, "Since a, therefore b.");
  EXPECT_EQ(v.logic_fallacies, (std::vector<FallacyCode>{FallacyCode::AF, FallacyCode::NF}));
  EXPECT_EQ(gateway.request_counts().at("judge"), 2u);

  ScriptedBackend bad(std::vector<std::string>{"nope", "still nope"});
  Gateway g2(bad, bad, options());
  EXPECT_THROW((void)g2.judge_sentence("s"), JsonError);
}

TEST(Gateway, BoundedConcurrency) {
  ScriptedBackend backend([](const ChatRequest&) { return std::string("score: 2"); });
  backend.set_delay_ms(5);
  auto o = options();
  o.parallelism_limit = 2;
  Gateway gateway(backend, backend, o);
  std::vector<std::jthread> threads;
  for (int i = 0; i < 6; ++i) {
    threads.emplace_back([&] { (void)gateway.score_sentence("s", FallacyCode::FC); });
  }
  threads.clear();
  EXPECT_LE(backend.peak_in_flight(), 2);
  EXPECT_EQ(gateway.total_requests(), 18u);
  EXPECT_EQ(backend.calls(), 18u);
}

}  // namespace
}  // namespace fallacy::llm
