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

#include <chrono>
#include <string>
#include <string_view>

#include "fallacy/llm/backend.hpp"

namespace fallacy::llm {

enum class ProviderKind { kOpenAI, kAnthropic };

[[nodiscard]] std::string_view provider_kind_name(ProviderKind kind) noexcept;
/// "openai" or "anthropic"; throws InputError otherwise.
[[nodiscard]] ProviderKind parse_provider_kind(std::string_view text);

/// JSON body for one chat request in the provider's wire format.
[[nodiscard]] std::string build_request_body(ProviderKind kind, const ChatRequest& request);
/// Completion text from a provider response body. Throws ProviderError when
/// the body does not have the expected shape.
[[nodiscard]] std::string extract_completion(ProviderKind kind, std::string_view body);

/// Chat completion over HTTP(S). `endpoint` is a base URL such as
/// `https://api.openai.com`; the provider's path is appended.
class HttpChatBackend : public ChatBackend {
 public:
  HttpChatBackend(ProviderKind kind, std::string endpoint, std::string api_key,
                  std::chrono::seconds timeout = std::chrono::seconds(120));

  /// 429, 5xx and connection failures raise TransientProviderError.
  std::string complete(const ChatRequest& request) override;

 private:
  ProviderKind kind_;
  std::string origin_;
  std::string base_path_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

}  // namespace fallacy::llm
