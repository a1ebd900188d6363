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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "fallacy/error.hpp"

namespace fallacy::cli {
namespace {

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["message"] = message;
  err << line.dump() << '\n';
}

void add_run_options(CLI::App& command, RunOptions& run, std::string& mode) {
  command.add_option("--mode", mode, "Provider mode")
      ->check(CLI::IsMember({"live", "replay", "record"}))
      ->capture_default_str();
  command.add_option("--cassette", run.cassette, "Cassette file for replay or record");
  command.add_option("--config", run.config, "Provider INI file");
  command.add_option("--out", run.out_dir, "Output directory")->capture_default_str();
}

Mode parse_mode(const std::string& mode) {
  if (mode == "live") return Mode::kLive;
  if (mode == "record") return Mode::kRecord;
  return Mode::kReplay;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fallacy benchmark tooling: logic schemas, generation and evaluation"};
  app.name(args.empty() ? "fallacy-forge" : args.front());
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log progress");

  ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a fact file against the vocabulary");
  validate_cmd->add_option("kb,--kb", validate.kb, "Prolog fact file")->required();
  validate_cmd->add_option("--code", validate.code, "Also check against this fallacy schema");

  DeriveOptions derive;
  auto* derive_cmd = app.add_subcommand("derive", "Print the valid tuples of a schema");
  derive_cmd->add_option("code,--code", derive.code, "Fallacy code")->required();
  derive_cmd->add_option("--kb", derive.kb, "Fact file (default: the built-in seed)");

  std::string seed_code;
  auto* seed_cmd = app.add_subcommand("seed", "Print the seed knowledge base of a schema");
  seed_cmd->add_option("code,--code", seed_code, "Fallacy code")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Print every schema's rules");

  GenerateOptions generate;
  std::string generate_mode = "replay";
  auto* generate_cmd = app.add_subcommand("generate", "Generate facts, tuples and sentences");
  generate_cmd->add_option("code,--code", generate.code, "Fallacy code")->required();
  generate_cmd->add_option("-n,--n", generate.n, "Fact groups to request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate_cmd->add_option("--style", generate.style, "Style example sentences, one per line");
  add_run_options(*generate_cmd, generate.run, generate_mode);

  ScoreOptions score;
  std::string score_mode = "replay";
  auto* score_cmd = app.add_subcommand("score", "Score labeled sentences");
  score_cmd->add_option("--sentences", score.sentences, "Labeled sentence JSONL (repeatable)")
      ->required();
  score_cmd->add_option("--method", score.methods, "Method tag per --sentences file");
  add_run_options(*score_cmd, score.run, score_mode);

  EvalOptions evaluate;
  std::string eval_mode = "replay";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate detection against a benchmark");
  eval_cmd->add_option("--bench", evaluate.bench, "Benchmark JSONL")->required();
  eval_cmd->add_option("--predictions", evaluate.predictions,
                       "Prediction JSONL (default: ask the judge)");
  eval_cmd->add_option("--agreement", evaluate.agreement, "Paired annotation JSONL for kappa");
  add_run_options(*eval_cmd, evaluate.run, eval_mode);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitInputError;
  }

  spdlog::set_level(verbose ? spdlog::level::info : spdlog::level::warn);
  try {
    if (*validate_cmd) return cmd_validate(validate, out, err);
    if (*derive_cmd) return cmd_derive(derive, out, err);
    if (*seed_cmd) return cmd_seed(seed_code, out);
    if (*catalog_cmd) return cmd_catalog(out);
    if (*generate_cmd) {
      generate.run.mode = parse_mode(generate_mode);
      return cmd_generate(generate, out, err);
    }
    if (*score_cmd) {
      score.run.mode = parse_mode(score_mode);
      return cmd_score(score, out, err);
    }
    evaluate.run.mode = parse_mode(eval_mode);
    return cmd_eval(evaluate, out, err);
  } catch (const ProviderError& e) {
    report_error(err, e.kind(), e.what());
    return kExitProviderError;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    report_error(err, "io_error", e.what());
    return kExitInputError;
  }
}

}  // namespace fallacy::cli
