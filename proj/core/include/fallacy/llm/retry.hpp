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
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>

#include "fallacy/llm/backend.hpp"

namespace fallacy::llm {

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds base_delay{500};
  std::chrono::milliseconds max_delay{16'000};
  /// Each delay is scaled by a factor drawn from [1 - jitter, 1 + jitter].
  double jitter = 0.2;
  std::uint64_t seed = 0;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

/// Retries TransientProviderError with exponential backoff. A server-sent
/// retry-after hint replaces the computed delay when it is longer.
class RetryingBackend : public ChatBackend {
 public:
  RetryingBackend(ChatBackend& inner, RetryPolicy policy, Sleeper sleeper = {});

  std::string complete(const ChatRequest& request) override;

  /// Calls made to the inner backend, retries included.
  [[nodiscard]] std::uint64_t attempts() const noexcept { return attempts_.load(); }
  [[nodiscard]] std::uint64_t retries() const noexcept { return retries_.load(); }

  /// Delay before retry number `retry` (0-based), without jitter.
  [[nodiscard]] std::chrono::milliseconds backoff(int retry) const;

 private:
  std::chrono::milliseconds jittered(std::chrono::milliseconds delay);

  ChatBackend& inner_;
  RetryPolicy policy_;
  Sleeper sleeper_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
  std::atomic<std::uint64_t> attempts_{0};
  std::atomic<std::uint64_t> retries_{0};
};

}  // namespace fallacy::llm
