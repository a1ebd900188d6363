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

#include <string>

namespace fallacy::llm {

struct ChatRequest {
  std::string model;
  double temperature = 1.0;
  std::string system;
  std::string user;
  int max_tokens = 2048;
};

/// Anything that can turn a chat request into completion text. Backends
/// must tolerate concurrent calls.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  /// Throws ProviderError (or TransientProviderError for retryable
  /// failures).
  virtual std::string complete(const ChatRequest& request) = 0;
};

/// Stable SHA-256 hex digest over the model, temperature, system and user
/// text of a request.
[[nodiscard]] std::string request_fingerprint(const ChatRequest& request);

}  // namespace fallacy::llm
