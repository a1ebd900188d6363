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

#include "fallacy/error.hpp"

namespace fallacy {

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string token, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + message +
                 (token.empty() ? std::string(" at end of input")
                                : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

}  // namespace fallacy
