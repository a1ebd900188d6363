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

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>
#include <thread>

#include "fallacy/error.hpp"
#include "fallacy/eval/dataset.hpp"
#include "fallacy/eval/report.hpp"
#include "fallacy/kb/parser.hpp"
#include "fallacy/kb/seeds.hpp"
#include "fallacy/llm/cassette.hpp"
#include "fallacy/llm/gateway.hpp"
#include "fallacy/llm/http_backend.hpp"
#include "fallacy/llm/provider_config.hpp"
#include "fallacy/llm/retry.hpp"
#include "fallacy/rules/derive.hpp"
#include "fallacy/rules/schema.hpp"
#include "fallacy/rules/validate.hpp"

namespace fallacy::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using rules::FallacyCode;

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kLive: return "live";
    case Mode::kReplay: return "replay";
    case Mode::kRecord: return "record";
  }
  return "replay";
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  if (!out) throw InputError("failed writing " + path.string());
}

FallacyCode schema_code(const std::string& text) {
  const FallacyCode code = rules::require_code(text);
  (void)rules::schema_for(code);
  return code;
}

/// Backends for one command run, wired per mode.
class Providers {
 public:
  explicit Providers(const RunOptions& run) : run_(run) {
    if (run.config) {
      config_ = llm::load_gateway_config(*run.config);
    } else {
      if (run.mode != Mode::kReplay) throw InputError("--config is required in live and record modes");
      config_.generator.model_name = "generator";
      config_.evaluator.model_name = "evaluator";
    }
    if (run.mode != Mode::kLive && !run.cassette) {
      throw InputError("--cassette is required in replay and record modes");
    }
    if (run.mode == Mode::kReplay) {
      auto replay = std::make_unique<llm::ReplayBackend>(llm::Cassette::load(*run.cassette));
      generator_ = evaluator_ = replay.get();
      owned_.push_back(std::move(replay));
      return;
    }
    generator_ = live(config_.generator, generator_retry_);
    evaluator_ = live(config_.evaluator, evaluator_retry_);
    if (run.mode == Mode::kRecord) {
      auto gen = std::make_unique<llm::RecordingBackend>(*generator_);
      auto eval = std::make_unique<llm::RecordingBackend>(*evaluator_);
      generator_recorder_ = gen.get();
      evaluator_recorder_ = eval.get();
      generator_ = gen.get();
      evaluator_ = eval.get();
      owned_.push_back(std::move(gen));
      owned_.push_back(std::move(eval));
    }
  }

  [[nodiscard]] llm::GatewayOptions gateway_options() const {
    llm::GatewayOptions options;
    options.generator_model = config_.generator.model_name;
    options.generator_temperature = config_.generator.temperature;
    options.evaluator_model = config_.evaluator.model_name;
    options.max_tokens = config_.generator.max_tokens;
    options.parallelism_limit =
        std::min(config_.generator.parallelism_limit, config_.evaluator.parallelism_limit);
    options.batch_size = config_.batch_size;
    return options;
  }

  /// Replay runs one request at a time so results never depend on timing.
  [[nodiscard]] std::size_t workers() const {
    if (run_.mode == Mode::kReplay) return 1;
    return static_cast<std::size_t>(gateway_options().parallelism_limit);
  }

  llm::ChatBackend& generator() { return *generator_; }
  llm::ChatBackend& evaluator() { return *evaluator_; }

  /// Saves the cassette in record mode and adds provider counters to `log`.
  void finish(ordered_json& log) {
    if (generator_retry_ != nullptr) {
      log["provider_attempts"] = generator_retry_->attempts() +
                                 (evaluator_retry_ != nullptr ? evaluator_retry_->attempts() : 0);
    }
    if (run_.mode == Mode::kRecord) {
      llm::Cassette combined = generator_recorder_->cassette();
      for (const auto& e : evaluator_recorder_->cassette().entries()) combined.append(e);
      fs::create_directories(run_.cassette->parent_path().empty() ? fs::path(".")
                                                                  : run_.cassette->parent_path());
      combined.save(*run_.cassette);
    }
  }

 private:
  llm::ChatBackend* live(const llm::ProviderConfig& provider, llm::RetryingBackend*& retry_out) {
    provider.validate();
    auto http = std::make_unique<llm::HttpChatBackend>(provider.kind, provider.endpoint,
                                                       provider.api_key(),
                                                       std::chrono::seconds(provider.timeout_seconds));
    llm::RetryPolicy policy;
    policy.max_retries = provider.max_retries;
    policy.seed = config_.seed;
    auto retry = std::make_unique<llm::RetryingBackend>(*http, policy);
    retry_out = retry.get();
    owned_.push_back(std::move(http));
    owned_.push_back(std::move(retry));
    return retry_out;
  }

  const RunOptions& run_;
  llm::GatewayConfig config_;
  std::vector<std::unique_ptr<llm::ChatBackend>> owned_;
  llm::ChatBackend* generator_ = nullptr;
  llm::ChatBackend* evaluator_ = nullptr;
  llm::RetryingBackend* generator_retry_ = nullptr;
  llm::RetryingBackend* evaluator_retry_ = nullptr;
  llm::RecordingBackend* generator_recorder_ = nullptr;
  llm::RecordingBackend* evaluator_recorder_ = nullptr;
};

/// fn(i) for every i < n on up to `workers` threads; results keep index
/// order and the lowest-index failure is rethrown.
template <typename R, typename Fn>
std::vector<R> map_indexed(std::size_t n, std::size_t workers, Fn&& fn) {
  std::vector<std::optional<R>> results(n);
  std::vector<std::exception_ptr> errors(n);
  auto work = [&](std::size_t i) {
    try {
      results[i] = fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      work(i);
      if (errors[i]) std::rethrow_exception(errors[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, n); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) work(i);
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

ordered_json counts_json(const std::map<std::string, std::uint64_t>& counts) {
  ordered_json j = ordered_json::object();
  for (const auto& [id, n] : counts) j[id] = n;
  return j;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::vector<std::string> out;
  std::istringstream in(eval::read_text_file(path));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back(line);
  }
  return out;
}

std::string padded_id(FallacyCode code, std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return std::string(rules::code_name(code)) + "-" + digits;
}

// Values are compared by their JSON text; arrays compare as sets.
std::string agreement_key(const nlohmann::json& value) {
  if (!value.is_array()) return value.dump();
  std::vector<std::string> items;
  for (const auto& item : value) {
    items.push_back(item.is_string() ? std::string(rules::code_name(rules::require_code(
                                           item.get<std::string>())))
                                     : item.dump());
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return nlohmann::json(items).dump();
}

}  // namespace

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream&) {
  const auto program = kb::parse_program(eval::read_text_file(options.kb));
  std::optional<FallacyCode> code;
  if (options.code) code = schema_code(*options.code);
  const auto report = rules::validate_program(program, code);
  if (!report.clean()) {
    out << report.to_string();
    return kExitFindings;
  }
  const auto facts = static_cast<std::size_t>(std::count_if(
      program.begin(), program.end(), [](const auto& p) { return p.clause.is_fact(); }));
  out << "ok: " << facts << " facts, " << program.size() - facts << " rules\n";
  return kExitOk;
}

int cmd_derive(const DeriveOptions& options, std::ostream& out, std::ostream& err) {
  const FallacyCode code = schema_code(options.code);
  kb::KnowledgeBase kb =
      options.kb ? kb::KnowledgeBase::load_file(*options.kb) : kb::load_seed(code);
  kb.seal();
  for (const auto& tuple : rules::derive_instances(code, kb)) out << tuple.to_string() << ".\n";
  if (auto diagnostic = rules::diagnose_ordering(code, kb);
      diagnostic && !diagnostic->rejected.empty()) {
    err << "note: " << diagnostic->to_string();
  }
  return kExitOk;
}

int cmd_seed(const std::string& code, std::ostream& out) {
  out << kb::seed_text(schema_code(code));
  return kExitOk;
}

int cmd_catalog(std::ostream& out) {
  out << rules::export_catalog();
  return kExitOk;
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  const FallacyCode code = schema_code(options.code);
  std::vector<std::string> style;
  if (options.style) {
    style = read_lines(*options.style);
  } else {
    const auto defaults = llm::default_style_examples(code);
    style.assign(defaults.begin(), defaults.end());
  }
  Providers providers(options.run);
  llm::Gateway gateway(providers.generator(), providers.evaluator(), providers.gateway_options());

  const kb::KnowledgeBase seed = kb::load_seed(code);
  const auto generated = gateway.generate_facts(code, seed, options.n, 0);
  kb::KnowledgeBase kb;
  for (const auto& record : generated.records) kb.add_fact(record);
  kb.seal();

  const auto tuples = rules::derive_instances(code, kb);
  if (tuples.empty()) {
    throw EmptyYieldError("generated facts yield no valid " +
                          std::string(rules::code_name(code)) + " tuples");
  }
  const auto sentences = gateway.transform_to_sentences(tuples, style);

  std::string tuple_text;
  for (const auto& t : tuples) tuple_text += t.to_string() + ".\n";
  std::vector<eval::BenchmarkEntry> entries;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    entries.push_back(eval::BenchmarkEntry{padded_id(code, i + 1), sentences[i].text,
                                           {sentences[i].code}, eval::Source::kAugmented});
  }

  ordered_json log;
  log["command"] = "generate";
  log["code"] = std::string(rules::code_name(code));
  log["n"] = options.n;
  log["mode"] = std::string(mode_name(options.run.mode));
  log["groups_accepted"] = generated.group_count();
  log["groups_rejected"] = generated.rejections.size();
  log["rejections"] = generated.rejections;
  log["facts"] = generated.records.size();
  log["tuples"] = tuples.size();
  log["sentences"] = sentences.size();
  log["requests"] = counts_json(gateway.request_counts());
  providers.finish(log);

  const fs::path& dir = options.run.out_dir;
  write_file(dir / "facts.pl", kb.serialize());
  write_file(dir / "tuples.pl", tuple_text);
  write_file(dir / "sentences.jsonl", eval::to_jsonl(entries));
  write_file(dir / "run_log.json", log.dump(2) + "\n");

  out << "generated " << sentences.size() << " " << rules::code_name(code) << " sentences from "
      << generated.group_count() << " fact groups into " << dir.string() << "\n";
  if (!generated.rejections.empty()) {
    err << "note: " << generated.rejections.size() << " generated group(s) rejected\n";
  }
  return kExitOk;
}

int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream&) {
  if (options.sentences.empty()) throw InputError("--sentences is required");
  if (!options.methods.empty() && options.methods.size() != options.sentences.size()) {
    throw InputError("give one --method per --sentences file");
  }
  Providers providers(options.run);
  llm::Gateway gateway(providers.evaluator(), providers.evaluator(), providers.gateway_options());

  std::string scores_jsonl;
  eval::ScoreStats stats;
  for (std::size_t f = 0; f < options.sentences.size(); ++f) {
    const std::string method = options.methods.empty() ? "default" : options.methods[f];
    const auto entries = eval::read_benchmark(options.sentences[f]);
    for (const auto& e : entries) {
      if (e.labels.empty()) throw InputError("entry " + e.id + " has no fallacy label to score");
    }
    const auto triples = map_indexed<llm::ScoreTriple>(
        entries.size(), providers.workers(),
        [&](std::size_t i) { return gateway.score_sentence(entries[i].sentence, entries[i].labels.front()); });
    for (std::size_t i = 0; i < triples.size(); ++i) {
      ordered_json row;
      row["id"] = entries[i].id;
      row["method"] = method;
      row["code"] = std::string(rules::code_name(triples[i].code));
      row["sentence"] = triples[i].sentence;
      row["scores"] = triples[i].scores;
      row["mean"] = eval::rational_json(triples[i].mean());
      scores_jsonl += row.dump() + "\n";
    }
    stats.merge(eval::score_stats(triples, method));
  }

  ordered_json log;
  log["command"] = "score";
  log["mode"] = std::string(mode_name(options.run.mode));
  log["requests"] = counts_json(gateway.request_counts());
  providers.finish(log);

  const fs::path& dir = options.run.out_dir;
  const std::string summary = eval::score_summary(stats);
  write_file(dir / "scores.jsonl", scores_jsonl);
  write_file(dir / "score_summary.txt", summary);
  write_file(dir / "histogram.csv", eval::histogram_csv(stats));
  write_file(dir / "run_log.json", log.dump(2) + "\n");
  out << summary;
  return kExitOk;
}

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream&) {
  const auto entries = eval::read_benchmark(options.bench);
  std::vector<eval::Prediction> predictions;
  ordered_json log;
  log["command"] = "eval";
  const fs::path& dir = options.run.out_dir;

  if (options.predictions) {
    predictions = eval::read_predictions(*options.predictions);
    log["mode"] = "predictions";
  } else {
    Providers providers(options.run);
    llm::Gateway gateway(providers.evaluator(), providers.evaluator(), providers.gateway_options());
    predictions = map_indexed<eval::Prediction>(
        entries.size(), providers.workers(), [&](std::size_t i) {
          auto verdict = gateway.judge_sentence(entries[i].sentence);
          if (verdict.logic_fallacies.size() > eval::kMaxPredictedLabels) {
            spdlog::warn("entry {}: keeping the top {} of {} labels", entries[i].id,
                         eval::kMaxPredictedLabels, verdict.logic_fallacies.size());
            verdict.logic_fallacies.resize(eval::kMaxPredictedLabels);
          }
          return eval::Prediction{entries[i].id, verdict.logic_error,
                                  std::move(verdict.logic_fallacies)};
        });
    log["mode"] = std::string(mode_name(options.run.mode));
    log["requests"] = counts_json(gateway.request_counts());
    providers.finish(log);
    write_file(dir / "predictions.jsonl", eval::to_jsonl(predictions));
  }

  eval::EvalReport report = eval::build_report(entries, predictions);
  if (options.agreement) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::size_t line_no = 0;
    for (const auto& line : read_lines(*options.agreement)) {
      ++line_no;
      try {
        const auto j = nlohmann::json::parse(line);
        a.push_back(agreement_key(j.at("a")));
        b.push_back(agreement_key(j.at("b")));
      } catch (const nlohmann::json::exception& e) {
        throw InputError("agreement line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    report.kappa = eval::cohens_kappa(a, b);
  }

  const std::string text = eval::report_text(report);
  write_file(dir / "report.json", eval::report_json(report).dump(2) + "\n");
  write_file(dir / "report.txt", text);
  if (!options.predictions) write_file(dir / "run_log.json", log.dump(2) + "\n");
  out << text;
  return kExitOk;
}

}  // namespace fallacy::cli
