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
#include <string>

#include "fallacy/eval/rational.hpp"
#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::llm {

/// Three 0..3 quality scores for one sentence.
struct ScoreTriple {
  std::string sentence;
  rules::FallacyCode code;
  std::array<int, 3> scores{};

  [[nodiscard]] eval::Rational mean() const {
    return eval::make_rational(scores[0] + scores[1] + scores[2], 3);
  }
};

}  // namespace fallacy::llm
