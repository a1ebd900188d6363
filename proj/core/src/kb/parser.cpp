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

#include "fallacy/kb/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <utility>

#include "fallacy/error.hpp"

namespace fallacy::kb {
namespace {

using logic::Clause;
using logic::Literal;
using logic::Term;

enum class Tok {
  kName,
  kVar,
  kInt,
  kLParen,
  kRParen,
  kComma,
  kDot,
  kNeck,
  kNot,
  kNeq,
  kLess,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Comment {
  std::size_t column;
  std::string text;
};

bool is_word_char(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return std::isalnum(uc) != 0 || c == '_';
}

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { scan(); }

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::map<std::size_t, Comment>& comments() const { return comments_; }
  const std::vector<bool>& blank_lines() const { return blank_; }

 private:
  void scan() {
    std::size_t line_start = 0;
    bool line_has_content = false;
    blank_.push_back(false);  // line 0 is unused
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        blank_.push_back(!line_has_content);
        line_has_content = false;
        ++pos_;
        ++line_;
        line_start = pos_;
        continue;
      }
      column_ = pos_ - line_start + 1;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        continue;
      }
      line_has_content = true;
      if (c == '%') {
        const auto end = text_.find('\n', pos_);
        const auto stop = end == std::string_view::npos ? text_.size() : end;
        comments_[line_] = Comment{column_, trim(text_.substr(pos_ + 1, stop - pos_ - 1))};
        pos_ = stop;
        continue;
      }
      lex_token();
    }
    blank_.push_back(!line_has_content);
    column_ = pos_ - line_start + 1;
    tokens_.push_back(Token{Tok::kEnd, "", line_, column_});
  }

  void push(Tok kind, std::size_t length) {
    tokens_.push_back(Token{kind, std::string(text_.substr(pos_, length)), line_, column_});
    pos_ += length;
  }

  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void lex_token() {
    const char c = text_[pos_];
    switch (c) {
      case '(': return push(Tok::kLParen, 1);
      case ')': return push(Tok::kRParen, 1);
      case ',': return push(Tok::kComma, 1);
      case '.': return push(Tok::kDot, 1);
      default: break;
    }
    if (starts_with(":-")) return push(Tok::kNeck, 2);
    if (starts_with("\\+")) return push(Tok::kNot, 2);
    if (starts_with("\\=")) return push(Tok::kNeq, 2);
    if (starts_with("@<")) return push(Tok::kLess, 2);

    std::size_t end = pos_;
    if (c == '-' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0) {
      ++end;
    }
    while (end < text_.size() && is_word_char(text_[end])) ++end;
    if (end == pos_) {
      throw SyntaxError(line_, column_, std::string(1, c), "unexpected character");
    }
    const std::string_view word = text_.substr(pos_, end - pos_);
    const bool numeric = word.find_first_not_of("-0123456789") == std::string_view::npos;
    if (numeric) {
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw SyntaxError(line_, column_, std::string(word), "integer out of range");
      }
      return push(Tok::kInt, word.size());
    }
    if (word.front() == '-') {
      throw SyntaxError(line_, column_, std::string(word), "unexpected character");
    }
    if (logic::is_valid_variable_name(word)) return push(Tok::kVar, word.size());
    if (logic::is_valid_atom_name(word)) return push(Tok::kName, word.size());
    throw SyntaxError(line_, column_, std::string(word), "invalid name");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<Token> tokens_;
  std::map<std::size_t, Comment> comments_;
  std::vector<bool> blank_;
};

class Parser {
 public:
  explicit Parser(const Lexer& lexer) : tokens_(lexer.tokens()) {}

  [[nodiscard]] bool at_end() const { return peek().kind == Tok::kEnd; }
  [[nodiscard]] const Token& peek() const { return tokens_[pos_]; }
  [[nodiscard]] const Token& previous() const { return tokens_[pos_ - 1]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw SyntaxError(t.line, t.column, t.text, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kVar: {
        ++pos_;
        if (t.text == "_") return Term::var("_G" + std::to_string(++anonymous_));
        return Term::var(t.text);
      }
      case Tok::kInt: {
        ++pos_;
        std::int64_t value = 0;
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        return Term::integer(value);
      }
      case Tok::kName: {
        ++pos_;
        if (!accept(Tok::kLParen)) return Term::atom(t.text);
        std::vector<Term> args;
        args.push_back(term());
        while (accept(Tok::kComma)) args.push_back(term());
        expect(Tok::kRParen, "')' or ','");
        return Term::compound(t.text, std::move(args));
      }
      default:
        fail("expected a term");
    }
  }

  Term callable(const char* what) {
    const Token start = peek();
    Term t = term();
    if (!t.is_callable()) {
      throw SyntaxError(start.line, start.column, start.text,
                        std::string(what) + " must be an atom or compound");
    }
    return t;
  }

  Literal literal() {
    if (accept(Tok::kNot)) {
      if (peek().kind == Tok::kLParen) {
        fail("negation of a conjunction is not supported; use an auxiliary rule");
      }
      return Literal::negation(callable("negated goal"));
    }
    const Token start = peek();
    Term lhs = term();
    if (accept(Tok::kNeq)) return Literal::not_equal(std::move(lhs), term());
    if (accept(Tok::kLess)) return Literal::term_less(std::move(lhs), term());
    if (!lhs.is_callable()) {
      throw SyntaxError(start.line, start.column, start.text,
                        "goal must be an atom or compound");
    }
    return Literal::goal(std::move(lhs));
  }

  std::vector<Literal> body() {
    std::vector<Literal> out;
    out.push_back(literal());
    while (accept(Tok::kComma)) out.push_back(literal());
    return out;
  }

  Clause clause() {
    Clause c;
    c.head = callable("clause head");
    if (accept(Tok::kNeck)) c.body = body();
    expect(Tok::kDot, "'.' ending the clause");
    return c;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t anonymous_ = 0;
};

}  // namespace

std::vector<ParsedClause> parse_program(std::string_view text) {
  const Lexer lexer(text);
  Parser parser(lexer);
  const auto& blank = lexer.blank_lines();
  std::vector<ParsedClause> out;
  std::size_t group = 0;
  std::size_t last_end_line = 0;
  while (!parser.at_end()) {
    const std::size_t start_line = parser.peek().line;
    ParsedClause parsed;
    parsed.line = start_line;
    parsed.clause = parser.clause();
    const Token& dot = parser.previous();
    if (!out.empty()) {
      for (std::size_t l = last_end_line + 1; l < start_line; ++l) {
        if (blank[l]) {
          ++group;
          break;
        }
      }
    }
    parsed.group_id = group;
    if (auto it = lexer.comments().find(dot.line);
        it != lexer.comments().end() && it->second.column > dot.column) {
      parsed.comment = it->second.text;
    }
    last_end_line = dot.line;
    out.push_back(std::move(parsed));
  }
  return out;
}

Term parse_term(std::string_view text) {
  const Lexer lexer(text);
  Parser parser(lexer);
  Term t = parser.term();
  if (!parser.at_end()) parser.fail("unexpected input after term");
  return t;
}

std::vector<Literal> parse_query(std::string_view text) {
  const Lexer lexer(text);
  Parser parser(lexer);
  auto goals = parser.body();
  parser.accept(Tok::kDot);
  if (!parser.at_end()) parser.fail("unexpected input after query");
  return goals;
}

}  // namespace fallacy::kb
