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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace fallacy::eval {

/// Exact rational number; all metric arithmetic uses it.
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// Parses "2.27", "-0.5", "3" or "8/3" exactly. Throws InputError otherwise.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Decimal text rounded half away from zero to `places` digits, e.g.
/// to_fixed(2/3, 3) == "0.667".
[[nodiscard]] std::string to_fixed(const Rational& value, int places);

/// "p/q", or "p" when the denominator is 1.
[[nodiscard]] std::string to_fraction(const Rational& value);

[[nodiscard]] double to_double(const Rational& value);

/// 1 + 1/2 + ... + 1/n.
[[nodiscard]] Rational harmonic(unsigned n);

}  // namespace fallacy::eval
