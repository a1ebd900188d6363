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

#include "fallacy/llm/response_parsing.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <regex>

#include "fallacy/error.hpp"

namespace fallacy::llm {
namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(start, end - start));
    start = end + 1;
  }
}

bool is_fence(std::string_view line) { return trim(line).substr(0, 3) == "```"; }

std::string_view strip_list_marker(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])) != 0) ++i;
  if (i > 0 && i < line.size() && (line[i] == '.' || line[i] == ')' || line[i] == ':')) {
    return trim(line.substr(i + 1));
  }
  if (!line.empty() && (line[0] == '-' || line[0] == '*' || line[0] == '\xE2')) {
    // "- ", "* " or a UTF-8 bullet (U+2022).
    if (line[0] != '\xE2') return trim(line.substr(1));
    if (line.substr(0, 3) == "\xE2\x80\xA2") return trim(line.substr(3));
  }
  return line;
}

std::string_view strip_quotes(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return trim(s.substr(1, s.size() - 2));
  if (s.size() >= 6 && s.substr(0, 3) == "\xE2\x80\x9C" && s.substr(s.size() - 3) == "\xE2\x80\x9D") {
    return trim(s.substr(3, s.size() - 6));
  }
  return s;
}

std::vector<rules::FallacyCode> parse_labels(const nlohmann::json& value) {
  std::vector<std::string> raw;
  if (value.is_array()) {
    for (const auto& item : value) {
      if (!item.is_string()) throw JsonError("logic_fallacies entries must be strings");
      raw.push_back(item.get<std::string>());
    }
  } else if (value.is_string()) {
    const std::string text = value.get<std::string>();
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      raw.emplace_back(trim(std::string_view(text).substr(start, end - start)));
      start = end + 1;
    }
  } else if (!value.is_null()) {
    throw JsonError("logic_fallacies must be a list or a string");
  }
  std::vector<rules::FallacyCode> out;
  for (const auto& label : raw) {
    const std::string_view cleaned = strip_list_marker(trim(label));
    if (cleaned.empty()) continue;
    const auto code = rules::parse_code(cleaned);
    if (!code) throw JsonError("unknown fallacy label \"" + std::string(cleaned) + "\"");
    if (std::find(out.begin(), out.end(), *code) == out.end()) out.push_back(*code);
  }
  return out;
}

bool parse_logic_error(const nlohmann::json& value) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_string()) {
    std::string text(trim(value.get<std::string>()));
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (text.rfind("yes", 0) == 0 || text == "true") return true;
    if (text.rfind("no", 0) == 0 || text == "false") return false;
  }
  throw JsonError("logic_error must be \"yes\" or \"no\"");
}

}  // namespace

std::string strip_code_fences(std::string_view text) {
  std::string fenced;
  std::string all;
  bool inside = false;
  bool any_fence = false;
  for_each_line(text, [&](std::string_view line) {
    if (is_fence(line)) {
      inside = !inside;
      any_fence = true;
      return;
    }
    all.append(line);
    all.push_back('\n');
    if (inside) {
      fenced.append(line);
      fenced.push_back('\n');
    }
  });
  return any_fence ? fenced : all;
}

std::vector<std::string> split_blocks(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!trim(current).empty()) out.emplace_back(trim(current));
    current.clear();
  };
  for_each_line(text, [&](std::string_view line) {
    if (trim(line).empty()) {
      flush();
    } else {
      current.append(line);
      current.push_back('\n');
    }
  });
  flush();
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for_each_line(strip_code_fences(text), [&](std::string_view line) {
    const auto cleaned = strip_quotes(strip_list_marker(trim(line)));
    if (!cleaned.empty()) out.emplace_back(cleaned);
  });
  return out;
}

std::optional<int> extract_score(std::string_view text) {
  static const std::regex kLabelled(R"(score\s*[:=]?\s*\**\s*([0-3])(?![0-9]))",
                                    std::regex::icase);
  static const std::regex kBare(R"((^|[^0-9.])([0-3])(?![0-9]|\.[0-9]|/[0-9]))");
  const std::string s(text);
  std::smatch match;
  if (std::regex_search(s, match, kLabelled)) return match[1].str()[0] - '0';
  if (std::regex_search(s, match, kBare)) return match[2].str()[0] - '0';
  return std::nullopt;
}

JudgeVerdict parse_verdict(std::string_view response) {
  std::string_view body = trim(response);
  std::string unfenced;
  if (body.substr(0, 3) == "```") {
    const auto first_newline = body.find('\n');
    const auto closing = body.rfind("```");
    if (first_newline == std::string_view::npos || closing <= first_newline) {
      throw JsonError("unterminated fenced block in verdict");
    }
    if (!trim(body.substr(closing + 3)).empty()) {
      throw JsonError("unexpected text after fenced verdict");
    }
    unfenced = std::string(body.substr(first_newline + 1, closing - first_newline - 1));
    body = unfenced;
  }
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(std::string("verdict is not valid JSON: ") + e.what());
  }
  if (!json.is_object()) throw JsonError("verdict must be a JSON object");
  if (!json.contains("logic_error")) throw JsonError("verdict lacks logic_error");

  JudgeVerdict verdict;
  verdict.logic_error = parse_logic_error(json.at("logic_error"));
  verdict.logic_fallacies =
      parse_labels(json.contains("logic_fallacies") ? json.at("logic_fallacies")
                                                    : nlohmann::json());
  if (json.contains("sentence") && json.at("sentence").is_string()) {
    verdict.sentence = json.at("sentence").get<std::string>();
  }
  if (json.contains("details") && json.at("details").is_string()) {
    verdict.details = json.at("details").get<std::string>();
  }
  return verdict;
}

}  // namespace fallacy::llm
