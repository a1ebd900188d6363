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

#include "fallacy/eval/rational.hpp"

#include <cctype>

#include "fallacy/error.hpp"

namespace fallacy::eval {

using boost::multiprecision::cpp_int;

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionDomainError("zero denominator");
  return Rational(cpp_int(numerator), cpp_int(denominator));
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  };
  if (text.empty()) return fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw DivisionDomainError("zero denominator in " + std::string(text));
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  cpp_int digits = 0;
  cpp_int scale = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digits = digits * 10 + (c - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  Rational value(digits, scale);
  return negative ? Rational(-value) : value;
}

std::string to_fixed(const Rational& value, int places) {
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const Rational scaled = magnitude * scale;
  const cpp_int num = boost::multiprecision::numerator(scaled);
  const cpp_int den = boost::multiprecision::denominator(scaled);
  cpp_int q = num / den;
  if ((num % den) * 2 >= den) ++q;

  std::string digits = q.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && q != 0) digits.insert(0, "-");
  return digits;
}

std::string to_fraction(const Rational& value) {
  const cpp_int den = boost::multiprecision::denominator(value);
  const std::string num = boost::multiprecision::numerator(value).str();
  return den == 1 ? num : num + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational harmonic(unsigned n) {
  Rational sum = 0;
  for (unsigned i = 1; i <= n; ++i) sum += Rational(cpp_int(1), cpp_int(i));
  return sum;
}

}  // namespace fallacy::eval
