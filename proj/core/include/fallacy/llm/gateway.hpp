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
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fallacy/kb/knowledge_base.hpp"
#include "fallacy/llm/backend.hpp"
#include "fallacy/llm/prompt.hpp"
#include "fallacy/llm/response_parsing.hpp"
#include "fallacy/llm/score_triple.hpp"
#include "fallacy/rules/derive.hpp"

namespace fallacy::llm {

struct GatewayOptions {
  std::string generator_model;
  double generator_temperature = 1.0;
  std::string evaluator_model;
  int max_tokens = 2048;
  /// Requests allowed in flight at once across all threads.
  std::ptrdiff_t parallelism_limit = 4;
  /// Groups or sentences requested per call.
  std::size_t batch_size = 20;
};

struct LabeledSentence {
  std::string text;
  rules::FallacyCode code;
};

struct GenerationResult {
  std::vector<kb::FactRecord> records;
  /// One human-readable reason per rejected group.
  std::vector<std::string> rejections;

  [[nodiscard]] std::size_t group_count() const;
};

/// Sample "Since ..., therefore ..." sentences used as the style list.
[[nodiscard]] std::span<const std::string> default_style_examples(rules::FallacyCode code);

/// Every model interaction of the pipeline. Thread-safe; calls are bounded by
/// the parallelism limit.
class Gateway {
 public:
  Gateway(ChatBackend& generator, ChatBackend& evaluator, GatewayOptions options);

  /// Asks for `n` new fact groups shaped like the seed, in batches. Groups
  /// that fail to parse or validate against the schema are dropped and
  /// logged. Accepted groups are numbered from `first_group_id`. Throws
  /// EmptyYieldError when `n` is zero or nothing is accepted.
  GenerationResult generate_facts(rules::FallacyCode code, const kb::KnowledgeBase& seed,
                                  std::size_t n, std::size_t first_group_id = 0);

  /// One sentence per tuple, in order. Tuples must be non-empty and share a
  /// code. A wrong sentence count gets one corrective reprompt, then
  /// CountMismatchError.
  std::vector<LabeledSentence> transform_to_sentences(
      std::span<const rules::ValidTuple> tuples,
      std::span<const std::string> style_examples);

  /// Three scoring calls at temperature 0. A reply without a score is asked
  /// again once, then ScoreParseError.
  ScoreTriple score_sentence(std::string_view sentence, rules::FallacyCode code);

  /// Judge call at temperature 0 with one reprompt on bad JSON or labels.
  JudgeVerdict judge_sentence(std::string_view sentence);

  /// Requests issued per prompt id, corrective reprompts included.
  [[nodiscard]] std::map<std::string, std::uint64_t> request_counts() const;
  [[nodiscard]] std::uint64_t total_requests() const;

 private:
  std::string call(ChatBackend& backend, const ChatRequest& request, PromptId id);
  ChatRequest generator_request(const RenderedPrompt& prompt) const;
  ChatRequest evaluator_request(const RenderedPrompt& prompt) const;

  ChatBackend& generator_;
  ChatBackend& evaluator_;
  GatewayOptions options_;
  std::unique_ptr<std::counting_semaphore<64>> slots_;
  mutable std::mutex counts_mutex_;
  std::map<std::string, std::uint64_t> counts_;
};

}  // namespace fallacy::llm
