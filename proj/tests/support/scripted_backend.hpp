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

#include <atomic>
#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "fallacy/llm/backend.hpp"

namespace fallacy::testing {

/// Which prompt a request was rendered from, recognised by its wording.
enum class PromptKind { kGenFacts, kTransform, kScore, kJudge, kUnknown };
PromptKind classify(const llm::ChatRequest& request);

/// Offline backend driven by a handler or a fixed queue of replies. Records
/// every request and the peak number of concurrent calls.
class ScriptedBackend : public llm::ChatBackend {
 public:
  using Handler = std::function<std::string(const llm::ChatRequest&)>;

  explicit ScriptedBackend(Handler handler) : handler_(std::move(handler)) {}
  explicit ScriptedBackend(std::vector<std::string> replies);

  std::string complete(const llm::ChatRequest& request) override;

  [[nodiscard]] std::vector<llm::ChatRequest> requests() const;
  [[nodiscard]] std::size_t calls() const;
  [[nodiscard]] int peak_in_flight() const { return peak_.load(); }

  /// Makes each call sleep briefly so overlapping calls become visible.
  void set_delay_ms(int ms) { delay_ms_ = ms; }

 private:
  Handler handler_;
  std::deque<std::string> replies_;
  mutable std::mutex mutex_;
  std::vector<llm::ChatRequest> requests_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
  int delay_ms_ = 0;
};

}  // namespace fallacy::testing
