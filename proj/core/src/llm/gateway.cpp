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

#include "fallacy/llm/gateway.hpp"

#include <algorithm>
#include <set>
#include <spdlog/spdlog.h>

#include "fallacy/error.hpp"
#include "fallacy/kb/parser.hpp"
#include "fallacy/rules/schema.hpp"
#include "fallacy/rules/validate.hpp"

namespace fallacy::llm {

using rules::FallacyCode;

std::size_t GenerationResult::group_count() const {
  std::set<std::size_t> groups;
  for (const auto& r : records) groups.insert(r.group_id);
  return groups.size();
}

std::span<const std::string> default_style_examples(FallacyCode code) {
  static const std::map<FallacyCode, std::vector<std::string>> kExamples = {
      {FallacyCode::ID,
       {"Since a ten minute walk burns a few calories, therefore a seventy minute "
        "walk once a week is the same as walking ten minutes every day."}},
      {FallacyCode::FA,
       {"Since a sea lion lives in the sea like a fish, therefore a sea lion "
        "should be able to breathe underwater."}},
      {FallacyCode::FP,
       {"Since a rainbow appears after rain and gold is found at its end, "
        "therefore every storm buries new gold."}},
      {FallacyCode::AF,
       {"Since the sign says to keep off the grass, therefore paramedics should "
        "not cross the lawn to reach an injured child."}},
      {FallacyCode::FC,
       {"Since every brick in the wall is light, therefore the whole wall must "
        "be light enough to lift."}},
      {FallacyCode::BQ,
       {"Since my horoscope is always right, and my horoscope says astrology is "
        "reliable, therefore astrology is reliable."}},
      {FallacyCode::CT,
       {"Since the saying goes that the early bird gets the worm, therefore "
        "people who wake up early must eat worms."}},
      {FallacyCode::IE,
       {"Since running makes you tired, therefore walking backwards should make "
        "you more energetic."}},
      {FallacyCode::IT,
       {"Since a fever implies feeling warm, therefore feeling warm after a "
        "sauna means you have a fever."}},
      {FallacyCode::WD,
       {"Since firefighters are always found at big fires, therefore "
        "firefighters cause big fires."}},
      {FallacyCode::FS,
       {"Since I wore my lucky socks and my team won, therefore my socks made "
        "my team win."}},
  };
  static const std::vector<std::string> kNone;
  const auto it = kExamples.find(code);
  return it == kExamples.end() ? std::span<const std::string>(kNone)
                               : std::span<const std::string>(it->second);
}

Gateway::Gateway(ChatBackend& generator, ChatBackend& evaluator, GatewayOptions options)
    : generator_(generator), evaluator_(evaluator), options_(std::move(options)) {
  if (options_.parallelism_limit < 1 || options_.parallelism_limit > 64) {
    throw PreconditionError("parallelism limit must lie in [1, 64]");
  }
  if (options_.batch_size == 0) throw PreconditionError("batch size must be positive");
  slots_ = std::make_unique<std::counting_semaphore<64>>(options_.parallelism_limit);
}

std::map<std::string, std::uint64_t> Gateway::request_counts() const {
  std::lock_guard lock(counts_mutex_);
  return counts_;
}

std::uint64_t Gateway::total_requests() const {
  std::uint64_t total = 0;
  for (const auto& [id, n] : request_counts()) total += n;
  return total;
}

std::string Gateway::call(ChatBackend& backend, const ChatRequest& request, PromptId id) {
  {
    std::lock_guard lock(counts_mutex_);
    ++counts_[std::string(prompt_id_name(id))];
  }
  slots_->acquire();
  struct Release {
    std::counting_semaphore<64>& s;
    ~Release() { s.release(); }
  } release{*slots_};
  return backend.complete(request);
}

ChatRequest Gateway::generator_request(const RenderedPrompt& prompt) const {
  return ChatRequest{options_.generator_model, options_.generator_temperature,
                     prompt.system, prompt.user, options_.max_tokens};
}

ChatRequest Gateway::evaluator_request(const RenderedPrompt& prompt) const {
  return ChatRequest{options_.evaluator_model, 0.0, prompt.system, prompt.user,
                     options_.max_tokens};
}

GenerationResult Gateway::generate_facts(FallacyCode code, const kb::KnowledgeBase& seed,
                                         std::size_t n, std::size_t first_group_id) {
  const auto& schema = rules::schema_for(code);
  if (n == 0) throw EmptyYieldError("asked for zero fact groups");
  if (seed.facts().empty()) throw PreconditionError("seed knowledge base has no facts");

  GenerationResult result;
  std::size_t accepted = 0;
  const std::size_t calls = (n + options_.batch_size - 1) / options_.batch_size;
  for (std::size_t c = 0; c < calls && accepted < n; ++c) {
    const std::size_t want = std::min(options_.batch_size, n - accepted);
    const auto prompt = prompt_template(PromptId::kGenFacts)
                            .render({{"count", std::to_string(want)},
                                     {"fallacy_type", std::string(rules::full_name(code))},
                                     {"Prolog_Facts", seed.serialize()},
                                     {"Prolog_rule", std::string(schema.text)}});
    const std::string response =
        call(generator_, generator_request(prompt), PromptId::kGenFacts);

    std::size_t block_no = 0;
    for (const auto& block : split_blocks(strip_code_fences(response))) {
      ++block_no;
      if (accepted >= n) break;
      std::vector<kb::ParsedClause> facts;
      try {
        for (auto& parsed : kb::parse_program(block)) {
          if (parsed.clause.is_fact()) facts.push_back(std::move(parsed));
        }
      } catch (const SyntaxError& e) {
        result.rejections.push_back("block " + std::to_string(block_no) + ": " + e.what());
        spdlog::info("rejected generated group {}: {}", block_no, e.what());
        continue;
      }
      if (facts.empty()) continue;
      const auto report = rules::validate_program(facts, code);
      if (!report.clean()) {
        std::string reason = report.to_string();
        if (!reason.empty() && reason.back() == '\n') reason.pop_back();
        result.rejections.push_back("block " + std::to_string(block_no) + ": " + reason);
        spdlog::info("rejected generated group {}: {}", block_no, reason);
        continue;
      }
      const std::size_t group = first_group_id + accepted;
      for (auto& parsed : facts) {
        result.records.push_back(
            kb::FactRecord{std::move(parsed.clause), std::move(parsed.comment), group});
      }
      ++accepted;
    }
  }
  if (accepted == 0) {
    throw EmptyYieldError("no usable fact groups in the model response for " +
                          std::string(rules::code_name(code)));
  }
  return result;
}

std::vector<LabeledSentence> Gateway::transform_to_sentences(
    std::span<const rules::ValidTuple> tuples, std::span<const std::string> style_examples) {
  if (tuples.empty()) throw PreconditionError("no tuples to transform");
  const FallacyCode code = tuples.front().code;
  for (const auto& t : tuples) {
    if (t.code != code) throw PreconditionError("tuples mix fallacy codes");
  }
  std::string examples;
  for (const auto& s : style_examples) {
    if (!examples.empty()) examples += ", ";
    examples += "\"" + s + "\"";
  }

  std::vector<LabeledSentence> out;
  for (std::size_t start = 0; start < tuples.size(); start += options_.batch_size) {
    const auto chunk = tuples.subspan(start, std::min(options_.batch_size, tuples.size() - start));
    std::string facts;
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      facts += std::to_string(i + 1) + ". " + chunk[i].to_string() + ".\n";
    }
    const auto prompt = prompt_template(PromptId::kTransform)
                            .render({{"count", std::to_string(chunk.size())},
                                     {"fallacy_type", std::string(rules::full_name(code))},
                                     {"list_of_sentence", examples},
                                     {"prolog_facts", facts}});
    ChatRequest request = generator_request(prompt);
    auto sentences = split_sentences(call(generator_, request, PromptId::kTransform));
    if (sentences.size() != chunk.size()) {
      spdlog::info("transform returned {} sentences for {} tuples; reprompting",
                   sentences.size(), chunk.size());
      request.user += "\n\nYour previous reply contained " + std::to_string(sentences.size()) +
                      " sentences. Return exactly " + std::to_string(chunk.size()) +
                      " sentences, one per line, and nothing else.";
      sentences = split_sentences(call(generator_, request, PromptId::kTransform));
      if (sentences.size() != chunk.size()) {
        throw CountMismatchError("expected " + std::to_string(chunk.size()) +
                                 " sentences, got " + std::to_string(sentences.size()));
      }
    }
    for (auto& s : sentences) out.push_back(LabeledSentence{std::move(s), code});
  }
  return out;
}

ScoreTriple Gateway::score_sentence(std::string_view sentence, FallacyCode code) {
  std::string definition = definition_line(code);
  if (!definition.empty() && definition.back() == '.') definition.pop_back();
  const auto prompt = prompt_template(PromptId::kScore)
                          .render({{"fallacy_definitions", definition},
                                   {"count", "1"},
                                   {"sentences", "type: " + std::string(rules::full_name(code)) +
                                                     " (" + std::string(rules::code_name(code)) +
                                                     ")\nsentence: " + std::string(sentence)}});
  const ChatRequest request = evaluator_request(prompt);
  ScoreTriple triple{std::string(sentence), code, {}};
  for (auto& score : triple.scores) {
    auto value = extract_score(call(evaluator_, request, PromptId::kScore));
    if (!value) value = extract_score(call(evaluator_, request, PromptId::kScore));
    if (!value) {
      throw ScoreParseError("no 0-3 score in evaluator reply for: " + std::string(sentence));
    }
    score = *value;
  }
  return triple;
}

JudgeVerdict Gateway::judge_sentence(std::string_view sentence) {
  const auto prompt = prompt_template(PromptId::kJudge)
                          .render({{"All_Logical_Fallacies_Definitions", all_definitions_block()},
                                   {"sentence", std::string(sentence)}});
  ChatRequest request = evaluator_request(prompt);
  JudgeVerdict verdict;
  try {
    verdict = parse_verdict(call(evaluator_, request, PromptId::kJudge));
  } catch (const JsonError& e) {
    spdlog::info("judge reply rejected ({}); reprompting", e.what());
    request.user +=
        "\n\nReturn only the JSON object described above, using category names "
        "from the list.";
    verdict = parse_verdict(call(evaluator_, request, PromptId::kJudge));
  }
  if (verdict.sentence.empty()) verdict.sentence = std::string(sentence);
  return verdict;
}

}  // namespace fallacy::llm
