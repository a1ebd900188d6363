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
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "fallacy/llm/backend.hpp"

namespace fallacy::llm {

struct CassetteEntry {
  std::string fingerprint;
  std::string model;
  std::string response;

  friend bool operator==(const CassetteEntry&, const CassetteEntry&) = default;
};

/// Recorded responses, one JSON object per line.
class Cassette {
 public:
  /// Throws InputError when the file is missing or a line is malformed.
  static Cassette load(const std::filesystem::path& path);
  static Cassette parse(std::string_view text);

  void append(CassetteEntry entry) { entries_.push_back(std::move(entry)); }
  [[nodiscard]] const std::vector<CassetteEntry>& entries() const noexcept {
    return entries_;
  }
  [[nodiscard]] std::string serialize() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<CassetteEntry> entries_;
};

/// Serves each request from the first unconsumed entry with a matching
/// fingerprint. Throws ReplayMissError when none is left.
class ReplayBackend : public ChatBackend {
 public:
  explicit ReplayBackend(Cassette cassette);

  std::string complete(const ChatRequest& request) override;

  [[nodiscard]] std::size_t consumed() const;
  [[nodiscard]] std::size_t remaining() const;

 private:
  mutable std::mutex mutex_;
  Cassette cassette_;
  std::vector<bool> used_;
  std::size_t consumed_ = 0;
};

/// Forwards to `inner` and records every successful exchange in call order.
class RecordingBackend : public ChatBackend {
 public:
  explicit RecordingBackend(ChatBackend& inner) : inner_(inner) {}

  std::string complete(const ChatRequest& request) override;

  [[nodiscard]] Cassette cassette() const;

 private:
  ChatBackend& inner_;
  mutable std::mutex mutex_;
  Cassette cassette_;
};

}  // namespace fallacy::llm
