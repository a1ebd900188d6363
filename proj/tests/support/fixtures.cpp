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

#include "fixtures.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <regex>
#include <stdexcept>

namespace fallacy::testing {
namespace {

using rules::FallacyCode;
using eval::Source;

struct Verdict {
  std::vector<std::string> replies;
};

const std::map<std::string, std::string>& transform_table() {
  static const std::map<std::string, std::string> table = {
      {"pd(library, keep_quiet, lower_voices_while_reading, never_shout_a_fire_warning)",
       "Since the library rule is to keep quiet, therefore nobody may shout a warning even when "
       "the building is on fire."},
      {"pd(swimming_pool, no_running, walk_on_wet_tiles, lifeguard_cannot_run_to_a_rescue)",
       "Since the pool sign says no running, therefore the lifeguard must walk while a child is "
       "drowning."},
      {"pd(hospital_ward, no_phone_calls, silence_ringers_near_patients, "
       "doctor_cannot_call_for_help)",
       "Since phone calls are banned on the ward, therefore a doctor cannot phone for help during "
       "a cardiac arrest."},
      {"pd(classroom, stay_seated, remain_seated_during_lessons, stay_seated_during_fire_alarm)",
       "Since students must stay seated in class, therefore they should stay in their chairs when "
       "the fire alarm rings."},
      {"pd(recipe_card, bake_40_minutes, bake_at_the_stated_temperature, "
       "bake_40_minutes_at_any_temperature)",
       "Since the recipe says to bake for 40 minutes, therefore the cake needs 40 minutes even in "
       "a blazing hot oven."},
  };
  return table;
}

// Replies per judged sentence, consumed in order (a second entry means the
// first reply is rejected and the judge asks again).
const std::map<std::string, std::vector<std::string>>& judge_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"Since the pool sign says no running, therefore the lifeguard must walk while a child is "
       "drowning.",
       {R"({"sentence": "Since the pool sign says no running, therefore the lifeguard must walk while a child is drowning.", "logic_error": "yes", "logic_fallacies": ["Accident Fallacy", "False Premise"], "details": "A general safety rule is applied to an emergency it was never meant to cover."})"}},
      {"Since my neighbour's cat is black and a black cat crossed my path before I lost my keys, "
       "therefore black cats make people lose things.",
       {"```json\n{\"sentence\": \"Since my neighbour's cat is black and a black cat crossed my path "
        "before I lost my keys, therefore black cats make people lose things.\", \"logic_error\": "
        "\"yes\", \"logic_fallacies\": [\"False Cause\", \"False Dilemma\"], "
        "\"details\": \"One coincidence is read as a cause.\"}\n```"}},
      {"Since every atom in a chair is invisible to the eye, therefore the chair is invisible.",
       {R"({"logic_error": "yes", "logic_fallacies": ["Fallacy of Composition"], "details": "Properties of the parts are transferred to the whole."})"}},
      {"Since the word 'light' describes things that are not heavy, therefore a bright lamp must "
       "weigh very little.",
       {"The sentence confuses two senses of a word.",
        R"({"logic_error": "yes", "logic_fallacies": ["FA", "EC"], "details": "Two meanings of light are treated as one."})"}},
      {"Since the scripture says it is true and it is true because the scripture says so, "
       "therefore the scripture is true.",
       {R"({"logic_error": "no", "logic_fallacies": [], "details": "Looks like a plain statement."})"}},
      {"Since water boils at 100 degrees Celsius at sea level, therefore a pot of water at sea "
       "level boils once it reaches 100 degrees Celsius.",
       {R"({"logic_error": "no", "logic_fallacies": [], "details": "Valid application of a physical law."})"}},
      {"Since all squares have four sides and this shape is a square, therefore this shape has "
       "four sides.",
       {R"({"logic_error": "no", "logic_fallacies": [], "details": "A valid syllogism."})"}},
      {"Since the train timetable lists a 9:15 departure, therefore I should be on the platform "
       "before 9:15.",
       {R"({"logic_error": "yes", "logic_fallacies": ["AC"], "details": "Over-cautious reading of a schedule."})"}},
  };
  return table;
}

const std::map<std::string, std::vector<int>>& score_table() {
  static const std::map<std::string, std::vector<int>> table = {
      {"Since rules are rules, therefore you must always follow every rule.", {1, 2, 1}},
      {"Since speeding is illegal, therefore an ambulance should never speed.", {2, 3, 2}},
      {"Since lying is wrong, therefore you must tell a burglar where your family is hiding.",
       {3, 2, 3}},
      {"Since the library rule is to keep quiet, therefore nobody may shout a warning even when "
       "the building is on fire.",
       {3, 3, 3}},
      {"Since the pool sign says no running, therefore the lifeguard must walk while a child is "
       "drowning.",
       {3, 3, 3}},
      {"Since the recipe says to bake for 40 minutes, therefore the cake needs 40 minutes even in "
       "a blazing hot oven.",
       {2, 3, 3}},
  };
  return table;
}

std::string after(const std::string& text, const std::string& marker, const std::string& end) {
  const auto start = text.find(marker);
  if (start == std::string::npos) throw std::logic_error("fixture: no marker " + marker);
  const auto from = start + marker.size();
  return text.substr(from, text.find(end, from) - from);
}

}  // namespace

std::string generation_reply() {
  return "Here are the combinations:\n\n"
         "```prolog\n"
         "hr(library, keep_quiet).  % the library posts a quiet rule\n"
         "rri(keep_quiet, lower_voices_while_reading).  % the sensible reading\n"
         "rui(keep_quiet, never_shout_a_fire_warning).  % an absurd literal reading\n"
         "\n"
         "hr(swimming_pool, no_running).  % poolside sign\n"
         "rri(no_running, walk_on_wet_tiles).  % meant to prevent slips\n"
         "rui(no_running, lifeguard_cannot_run_to_a_rescue).  % misapplied to an emergency\n"
         "\n"
         "hr(gym, no_food  % unfinished clause\n"
         "rri(no_food, keep_snacks_out_of_the_weight_room).\n"
         "\n"
         "hr(hospital_ward, no_phone_calls).  % ward policy\n"
         "rri(no_phone_calls, silence_ringers_near_patients).  % the purpose of the policy\n"
         "rui(no_phone_calls, doctor_cannot_call_for_help).  % rigid reading\n"
         "\n"
         "hr(classroom, stay_seated).  % classroom rule\n"
         "rri(stay_seated, remain_seated_during_lessons).  % ordinary meaning\n"
         "rui(stay_seated, stay_seated_during_fire_alarm).  % ignores the exception\n"
         "\n"
         "hr(recipe_card, bake_40_minutes).  % written on the card\n"
         "rri(bake_40_minutes, bake_at_the_stated_temperature).  % implicit condition\n"
         "rui(bake_40_minutes, bake_40_minutes_at_any_temperature).  % condition dropped\n"
         "\n"
         "hr(parking_lot, two_hour_limit).  % surplus group beyond the request\n"
         "rri(two_hour_limit, move_the_car_after_two_hours).\n"
         "rui(two_hour_limit, tow_cars_during_a_snowstorm).\n"
         "```\n";
}

std::vector<eval::BenchmarkEntry> small_bench() {
  return {
      {"b01",
       "Since the pool sign says no running, therefore the lifeguard must walk while a child is "
       "drowning.",
       {FallacyCode::AF},
       Source::kAugmented},
      {"b02",
       "Since my neighbour's cat is black and a black cat crossed my path before I lost my keys, "
       "therefore black cats make people lose things.",
       {FallacyCode::FS},
       Source::kBench},
      {"b03", "Since every atom in a chair is invisible to the eye, therefore the chair is invisible.",
       {FallacyCode::FC},
       Source::kBench},
      {"b04",
       "Since the word 'light' describes things that are not heavy, therefore a bright lamp must "
       "weigh very little.",
       {FallacyCode::EC},
       Source::kBench},
      {"b05",
       "Since the scripture says it is true and it is true because the scripture says so, "
       "therefore the scripture is true.",
       {FallacyCode::BQ},
       Source::kBench},
      {"b06",
       "Since water boils at 100 degrees Celsius at sea level, therefore a pot of water at sea "
       "level boils once it reaches 100 degrees Celsius.",
       {},
       Source::kBenign},
      {"b07",
       "Since all squares have four sides and this shape is a square, therefore this shape has "
       "four sides.",
       {},
       Source::kBenign},
      {"b08",
       "Since the train timetable lists a 9:15 departure, therefore I should be on the platform "
       "before 9:15.",
       {},
       Source::kBenign},
  };
}

std::vector<eval::Prediction> perfect_predictions() {
  std::vector<eval::Prediction> out;
  for (const auto& e : small_bench()) out.push_back({e.id, e.fallacious(), e.labels});
  return out;
}

std::vector<eval::BenchmarkEntry> direct_sentences() {
  return {
      {"d01", "Since rules are rules, therefore you must always follow every rule.",
       {FallacyCode::AF}, Source::kAugmented},
      {"d02", "Since speeding is illegal, therefore an ambulance should never speed.",
       {FallacyCode::AF}, Source::kAugmented},
      {"d03", "Since lying is wrong, therefore you must tell a burglar where your family is hiding.",
       {FallacyCode::AF}, Source::kAugmented},
  };
}

std::vector<eval::BenchmarkEntry> schema_sentences() {
  return {
      {"s01",
       "Since the library rule is to keep quiet, therefore nobody may shout a warning even when "
       "the building is on fire.",
       {FallacyCode::AF}, Source::kAugmented},
      {"s02",
       "Since the pool sign says no running, therefore the lifeguard must walk while a child is "
       "drowning.",
       {FallacyCode::AF}, Source::kAugmented},
      {"s03",
       "Since the recipe says to bake for 40 minutes, therefore the cake needs 40 minutes even in "
       "a blazing hot oven.",
       {FallacyCode::AF}, Source::kAugmented},
  };
}

ScriptedBackend::Handler fixture_handler() {
  struct State {
    std::mutex mutex;
    std::map<std::string, std::size_t> judged;
    std::map<std::string, std::size_t> scored;
  };
  auto state = std::make_shared<State>();
  return [state](const llm::ChatRequest& request) -> std::string {
    switch (classify(request)) {
      case PromptKind::kGenFacts:
        return generation_reply();
      case PromptKind::kTransform: {
        static const std::regex line(R"((\d+)\. (pd\(.*\))\.)");
        std::string out;
        for (std::sregex_iterator it(request.user.begin(), request.user.end(), line), end;
             it != end; ++it) {
          out += (*it)[1].str() + ". " + transform_table().at((*it)[2].str()) + "\n";
        }
        return out;
      }
      case PromptKind::kJudge: {
        const std::string sentence =
            after(request.user, "Judge the following element:\n\n", "\n\nPlease return");
        std::lock_guard lock(state->mutex);
        const auto& replies = judge_table().at(sentence);
        const std::size_t i = state->judged[sentence]++;
        return replies.at(std::min(i, replies.size() - 1));
      }
      case PromptKind::kScore: {
        const std::string sentence = after(request.user, "sentence: ", "\n");
        std::lock_guard lock(state->mutex);
        const auto& scores = score_table().at(sentence);
        const std::size_t i = state->scored[sentence]++;
        return "The sentence fits the type well.\nscore: " + std::to_string(scores.at(i % 3));
      }
      case PromptKind::kUnknown:
        break;
    }
    throw std::logic_error("fixture: unrecognised request");
  };
}

}  // namespace fallacy::testing
