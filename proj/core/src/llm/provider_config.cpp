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

#include "fallacy/llm/provider_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cstdlib>
#include <sstream>

#include "fallacy/error.hpp"
#include "fallacy/io.hpp"

namespace fallacy::llm {

namespace pt = boost::property_tree;

void ProviderConfig::validate() const {
  if (model_name.empty()) throw InputError("provider config: model is required");
  if (endpoint.find("://") == std::string::npos) {
    throw InputError("provider config: endpoint must be a URL: " + endpoint);
  }
  if (!(temperature >= 0.0 && temperature <= 2.0)) {
    throw InputError("provider config: temperature must lie in [0, 2]");
  }
  if (max_retries < 0 || max_retries > 10) {
    throw InputError("provider config: max_retries must lie in [0, 10]");
  }
  if (parallelism_limit < 1 || parallelism_limit > 64) {
    throw InputError("provider config: parallelism_limit must lie in [1, 64]");
  }
  if (max_tokens < 1) throw InputError("provider config: max_tokens must be positive");
  if (timeout_seconds < 1) throw InputError("provider config: timeout must be positive");
}

std::string ProviderConfig::api_key() const {
  if (api_key_env.empty()) return {};
  const char* value = std::getenv(api_key_env.c_str());
  if (value == nullptr || *value == '\0') {
    throw InputError("environment variable " + api_key_env + " is not set");
  }
  return value;
}

namespace {

ProviderConfig read_provider(const pt::ptree& root, const std::string& section) {
  ProviderConfig config;
  const auto child = root.get_child_optional(section);
  if (!child) return config;
  const pt::ptree& s = *child;
  config.kind = parse_provider_kind(s.get<std::string>("kind", "openai"));
  config.endpoint = s.get<std::string>(
      "endpoint", config.kind == ProviderKind::kOpenAI ? "https://api.openai.com"
                                                       : "https://api.anthropic.com");
  config.model_name = s.get<std::string>("model", "");
  config.temperature = s.get<double>("temperature", config.temperature);
  config.max_retries = s.get<int>("max_retries", config.max_retries);
  config.parallelism_limit = s.get<int>("parallelism_limit", config.parallelism_limit);
  config.max_tokens = s.get<int>("max_tokens", config.max_tokens);
  config.timeout_seconds = s.get<int>("timeout_seconds", config.timeout_seconds);
  config.api_key_env = s.get<std::string>("api_key_env", "");
  config.validate();
  return config;
}

}  // namespace

GatewayConfig parse_gateway_config(std::string_view text) {
  pt::ptree root;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, root);
    GatewayConfig config;
    config.generator = read_provider(root, "generator");
    config.evaluator = root.get_child_optional("evaluator")
                           ? read_provider(root, "evaluator")
                           : config.generator;
    config.batch_size = root.get<std::size_t>("run.batch_size", config.batch_size);
    config.seed = root.get<std::uint64_t>("run.seed", config.seed);
    if (config.batch_size == 0) throw InputError("run.batch_size must be positive");
    return config;
  } catch (const pt::ptree_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
}

GatewayConfig load_gateway_config(const std::filesystem::path& path) {
  return parse_gateway_config(read_file_bytes(path, "config"));
}

}  // namespace fallacy::llm
