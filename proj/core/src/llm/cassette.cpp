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

#include "fallacy/llm/cassette.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "fallacy/error.hpp"
#include "fallacy/io.hpp"

namespace fallacy::llm {

Cassette Cassette::parse(std::string_view text) {
  Cassette cassette;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto json = nlohmann::json::parse(line);
      cassette.append(CassetteEntry{json.at("fingerprint").get<std::string>(),
                                    json.value("model", std::string()),
                                    json.at("response").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw InputError("cassette line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cassette;
}

Cassette Cassette::load(const std::filesystem::path& path) {
  return parse(read_file_bytes(path, "cassette"));
}

std::string Cassette::serialize() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::ordered_json line;
    line["fingerprint"] = e.fingerprint;
    line["model"] = e.model;
    line["response"] = e.response;
    out += line.dump();
    out += '\n';
  }
  return out;
}

void Cassette::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write cassette: " + path.string());
  out << serialize();
}

ReplayBackend::ReplayBackend(Cassette cassette)
    : cassette_(std::move(cassette)), used_(cassette_.entries().size(), false) {}

std::string ReplayBackend::complete(const ChatRequest& request) {
  const std::string fingerprint = request_fingerprint(request);
  std::lock_guard lock(mutex_);
  const auto& entries = cassette_.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!used_[i] && entries[i].fingerprint == fingerprint) {
      used_[i] = true;
      ++consumed_;
      return entries[i].response;
    }
  }
  throw ReplayMissError("no recorded response for request " + fingerprint +
                        " (model " + request.model + ")");
}

std::size_t ReplayBackend::consumed() const {
  std::lock_guard lock(mutex_);
  return consumed_;
}

std::size_t ReplayBackend::remaining() const {
  std::lock_guard lock(mutex_);
  return cassette_.entries().size() - consumed_;
}

std::string RecordingBackend::complete(const ChatRequest& request) {
  std::string response = inner_.complete(request);
  std::lock_guard lock(mutex_);
  cassette_.append(CassetteEntry{request_fingerprint(request), request.model, response});
  return response;
}

Cassette RecordingBackend::cassette() const {
  std::lock_guard lock(mutex_);
  return cassette_;
}

}  // namespace fallacy::llm
