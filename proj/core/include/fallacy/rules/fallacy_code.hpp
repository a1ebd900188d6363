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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fallacy::rules {

/// The fourteen fallacy categories. The first eleven carry rule schemas; EC,
/// NF and FD exist as labels only.
enum class FallacyCode {
  ID,
  FA,
  FP,
  AF,
  FC,
  BQ,
  CT,
  IE,
  IT,
  WD,
  FS,
  EC,
  NF,
  FD,
};

inline constexpr std::array<FallacyCode, 14> kAllCodes = {
    FallacyCode::ID, FallacyCode::FA, FallacyCode::FP, FallacyCode::AF,
    FallacyCode::FC, FallacyCode::BQ, FallacyCode::CT, FallacyCode::IE,
    FallacyCode::IT, FallacyCode::WD, FallacyCode::FS, FallacyCode::EC,
    FallacyCode::NF, FallacyCode::FD};

inline constexpr std::array<FallacyCode, 11> kSchemaCodes = {
    FallacyCode::ID, FallacyCode::FA, FallacyCode::FP, FallacyCode::AF,
    FallacyCode::FC, FallacyCode::BQ, FallacyCode::CT, FallacyCode::IE,
    FallacyCode::IT, FallacyCode::WD, FallacyCode::FS};

[[nodiscard]] constexpr bool has_schema(FallacyCode code) noexcept {
  return code != FallacyCode::EC && code != FallacyCode::NF &&
         code != FallacyCode::FD;
}

/// Two-letter canonical code, e.g. "AF".
[[nodiscard]] std::string_view code_name(FallacyCode code) noexcept;
/// Human-readable category name, e.g. "Accident Fallacy".
[[nodiscard]] std::string_view full_name(FallacyCode code) noexcept;
/// Category definition used in judge and scoring prompts.
[[nodiscard]] std::string_view definition(FallacyCode code) noexcept;

/// Accepts codes and full names case-insensitively, a trailing or embedded
/// "(XX)" code, and the alias "AC" for AF.
[[nodiscard]] std::optional<FallacyCode> parse_code(std::string_view text);

/// Like parse_code but throws InputError naming the offending text.
[[nodiscard]] FallacyCode require_code(std::string_view text);

}  // namespace fallacy::rules
