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

#include <filesystem>
#include <string>
#include <string_view>

namespace fallacy {

/// Whole file as bytes. Throws InputError naming `what` when the path is
/// missing, is not a regular file, or cannot be read.
[[nodiscard]] std::string read_file_bytes(const std::filesystem::path& path,
                                          std::string_view what);

}  // namespace fallacy
