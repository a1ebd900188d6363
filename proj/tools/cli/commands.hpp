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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fallacy::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,
  kExitInputError = 2,
  kExitProviderError = 3,
};

enum class Mode { kLive, kReplay, kRecord };

/// Provider and run settings shared by the commands that call a model.
struct RunOptions {
  Mode mode = Mode::kReplay;
  std::optional<std::filesystem::path> cassette;
  std::optional<std::filesystem::path> config;
  std::filesystem::path out_dir = "out";
};

struct ValidateOptions {
  std::filesystem::path kb;
  std::optional<std::string> code;
};

struct DeriveOptions {
  std::string code;
  std::optional<std::filesystem::path> kb;
};

struct GenerateOptions {
  std::string code;
  std::size_t n = 20;
  std::optional<std::filesystem::path> style;
  RunOptions run;
};

struct ScoreOptions {
  std::vector<std::filesystem::path> sentences;
  std::vector<std::string> methods;
  RunOptions run;
};

struct EvalOptions {
  std::filesystem::path bench;
  std::optional<std::filesystem::path> predictions;
  std::optional<std::filesystem::path> agreement;
  RunOptions run;
};

/// Each command writes results to `out`, notes to `err`, and returns an exit
/// code. Library errors propagate to `run`, which maps them.
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int cmd_derive(const DeriveOptions& options, std::ostream& out, std::ostream& err);
int cmd_seed(const std::string& code, std::ostream& out);
int cmd_catalog(std::ostream& out);
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] included), runs the command, and reports any
/// error as one JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fallacy::cli
