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

#include <string_view>

#include "fallacy/kb/knowledge_base.hpp"
#include "fallacy/rules/fallacy_code.hpp"

namespace fallacy::kb {

/// Fact-file text of the worked example for a schema code.
/// Throws UnknownSchemaError for label-only codes.
[[nodiscard]] std::string_view seed_text(rules::FallacyCode code);

/// Sealed knowledge base holding the worked example as group 0.
[[nodiscard]] KnowledgeBase load_seed(rules::FallacyCode code);

}  // namespace fallacy::kb
