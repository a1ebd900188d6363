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

#include "fallacy/llm/retry.hpp"

#include <algorithm>
#include <spdlog/spdlog.h>
#include <thread>

#include "fallacy/error.hpp"

namespace fallacy::llm {

RetryingBackend::RetryingBackend(ChatBackend& inner, RetryPolicy policy, Sleeper sleeper)
    : inner_(inner),
      policy_(policy),
      sleeper_(sleeper ? std::move(sleeper)
                       : Sleeper([](std::chrono::milliseconds d) {
                           std::this_thread::sleep_for(d);
                         })),
      rng_(policy.seed) {}

std::chrono::milliseconds RetryingBackend::backoff(int retry) const {
  auto delay = policy_.base_delay;
  for (int i = 0; i < retry && delay < policy_.max_delay; ++i) delay *= 2;
  return std::min(delay, policy_.max_delay);
}

std::chrono::milliseconds RetryingBackend::jittered(std::chrono::milliseconds delay) {
  if (policy_.jitter <= 0) return delay;
  std::uniform_real_distribution<double> factor(1.0 - policy_.jitter, 1.0 + policy_.jitter);
  std::lock_guard lock(rng_mutex_);
  return std::chrono::milliseconds(
      static_cast<std::int64_t>(static_cast<double>(delay.count()) * factor(rng_)));
}

std::string RetryingBackend::complete(const ChatRequest& request) {
  for (int retry = 0;; ++retry) {
    ++attempts_;
    try {
      return inner_.complete(request);
    } catch (const TransientProviderError& e) {
      if (retry >= policy_.max_retries) throw;
      auto delay = jittered(backoff(retry));
      if (e.retry_after() && *e.retry_after() > delay) delay = *e.retry_after();
      spdlog::warn("transient provider failure ({}), retry {}/{} in {} ms", e.what(),
                   retry + 1, policy_.max_retries, delay.count());
      ++retries_;
      sleeper_(delay);
    }
  }
}

}  // namespace fallacy::llm
