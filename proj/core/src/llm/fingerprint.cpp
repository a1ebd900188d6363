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

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>
#include <nlohmann/json.hpp>

#include "fallacy/error.hpp"
#include "fallacy/llm/backend.hpp"

namespace fallacy::llm {

std::string request_fingerprint(const ChatRequest& request) {
  std::array<char, 32> temperature{};
  std::snprintf(temperature.data(), temperature.size(), "%.3f", request.temperature);
  // Keys are emitted in sorted order, so the dump is canonical.
  const nlohmann::json canonical = {
      {"model", request.model},
      {"system", request.system},
      {"temperature", temperature.data()},
      {"user", request.user},
  };
  const std::string payload = canonical.dump();

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace fallacy::llm
