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

#include "fallacy/llm/http_backend.hpp"

#include <httplib.h>

#include <charconv>
#include <nlohmann/json.hpp>

#include "fallacy/error.hpp"

namespace fallacy::llm {

std::string_view provider_kind_name(ProviderKind kind) noexcept {
  return kind == ProviderKind::kOpenAI ? "openai" : "anthropic";
}

ProviderKind parse_provider_kind(std::string_view text) {
  if (text == "openai") return ProviderKind::kOpenAI;
  if (text == "anthropic") return ProviderKind::kAnthropic;
  throw InputError("unknown provider kind: " + std::string(text));
}

std::string build_request_body(ProviderKind kind, const ChatRequest& request) {
  nlohmann::ordered_json body;
  body["model"] = request.model;
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  if (kind == ProviderKind::kOpenAI) {
    body["messages"] = nlohmann::json::array();
    if (!request.system.empty()) {
      body["messages"].push_back({{"role", "system"}, {"content", request.system}});
    }
    body["messages"].push_back({{"role", "user"}, {"content", request.user}});
  } else {
    if (!request.system.empty()) body["system"] = request.system;
    body["messages"] = nlohmann::json::array(
        {nlohmann::json{{"role", "user"}, {"content", request.user}}});
  }
  return body.dump();
}

std::string extract_completion(ProviderKind kind, std::string_view body) {
  try {
    const auto json = nlohmann::json::parse(body);
    if (kind == ProviderKind::kOpenAI) {
      return json.at("choices").at(0).at("message").at("content").get<std::string>();
    }
    std::string text;
    for (const auto& block : json.at("content")) {
      if (block.value("type", "") == "text") text += block.at("text").get<std::string>();
    }
    return text;
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(std::string("unexpected provider response: ") + e.what());
  }
}

HttpChatBackend::HttpChatBackend(ProviderKind kind, std::string endpoint,
                                 std::string api_key, std::chrono::seconds timeout)
    : kind_(kind), api_key_(std::move(api_key)), timeout_(timeout) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw InputError("endpoint must include a scheme: " + endpoint);
  }
  const auto path_start = endpoint.find('/', scheme_end + 3);
  origin_ = endpoint.substr(0, path_start);
  if (path_start != std::string::npos) base_path_ = endpoint.substr(path_start);
  while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
}

std::string HttpChatBackend::complete(const ChatRequest& request) {
  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);

  httplib::Headers headers;
  std::string path = base_path_;
  if (kind_ == ProviderKind::kOpenAI) {
    path += "/v1/chat/completions";
    headers.emplace("Authorization", "Bearer " + api_key_);
  } else {
    path += "/v1/messages";
    headers.emplace("x-api-key", api_key_);
    headers.emplace("anthropic-version", "2023-06-01");
  }

  auto result = client.Post(path, headers, build_request_body(kind_, request),
                            "application/json");
  if (!result) {
    throw TransientProviderError("request to " + origin_ + path + " failed: " +
                                 httplib::to_string(result.error()));
  }
  const int status = result->status;
  if (status == 429 || status >= 500) {
    std::optional<std::chrono::milliseconds> retry_after;
    if (result->has_header("Retry-After")) {
      const auto value = result->get_header_value("Retry-After");
      long long seconds = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seconds);
      if (ec == std::errc() && ptr == value.data() + value.size()) {
        retry_after = std::chrono::seconds(seconds);
      }
    }
    throw TransientProviderError("provider returned HTTP " + std::to_string(status),
                                 retry_after);
  }
  if (status < 200 || status >= 300) {
    throw ProviderError("provider returned HTTP " + std::to_string(status) + ": " +
                        result->body.substr(0, 500));
  }
  return extract_completion(kind_, result->body);
}

}  // namespace fallacy::llm
