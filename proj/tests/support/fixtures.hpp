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
#include <vector>

#include "fallacy/eval/dataset.hpp"
#include "scripted_backend.hpp"

// Hand-written model replies behind the committed replay cassettes.
namespace fallacy::testing {

/// Fact groups returned for the accident-fallacy generation request. One
/// block is deliberately malformed.
std::string generation_reply();

/// Small mixed benchmark judged by the scripted evaluator.
std::vector<eval::BenchmarkEntry> small_bench();
/// Predictions that match `small_bench` exactly.
std::vector<eval::Prediction> perfect_predictions();

/// Labeled accident-fallacy sentences from two generation methods.
std::vector<eval::BenchmarkEntry> direct_sentences();
std::vector<eval::BenchmarkEntry> schema_sentences();

/// Replies to every request the cassette scenarios make, keyed on the
/// request content. Stateful: repeated score requests walk a score list.
ScriptedBackend::Handler fixture_handler();

/// Model names used when replaying without a config file.
inline constexpr const char* kGeneratorModel = "generator";
inline constexpr const char* kEvaluatorModel = "evaluator";

}  // namespace fallacy::testing
