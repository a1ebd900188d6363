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
#include <filesystem>
#include <string>
#include <string_view>

#include "fallacy/llm/http_backend.hpp"

namespace fallacy::llm {

struct ProviderConfig {
  ProviderKind kind = ProviderKind::kOpenAI;
  std::string endpoint = "https://api.openai.com";
  std::string model_name;
  double temperature = 1.0;
  int max_retries = 3;
  int parallelism_limit = 4;
  int max_tokens = 2048;
  int timeout_seconds = 120;
  /// Environment variable holding the API key.
  std::string api_key_env;

  /// Throws InputError when a field is out of range.
  void validate() const;
  /// Reads the key from the environment; throws InputError when unset.
  [[nodiscard]] std::string api_key() const;
};

/// `[generator]` and `[evaluator]` sections plus a `[run]` section:
///
///     [generator]
///     kind = anthropic
///     endpoint = https://api.anthropic.com
///     model = some-model
///     temperature = 1.0
///     api_key_env = ANTHROPIC_API_KEY
///
///     [run]
///     batch_size = 20
///     seed = 7
struct GatewayConfig {
  ProviderConfig generator;
  ProviderConfig evaluator;
  std::size_t batch_size = 20;
  std::uint64_t seed = 0;
};

/// Throws InputError on malformed text or invalid values.
[[nodiscard]] GatewayConfig parse_gateway_config(std::string_view text);
[[nodiscard]] GatewayConfig load_gateway_config(const std::filesystem::path& path);

}  // namespace fallacy::llm
