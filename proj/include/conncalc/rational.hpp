// Copyright 2026 The conncalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONNCALC_RATIONAL_HPP
#define CONNCALC_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace conncalc {

// Arbitrary-precision exact rational. All scores, magnitudes and attribute
// values go through this type; no binary floating point anywhere in the
// numeric path.
using Rational = boost::multiprecision::cpp_rational;

// Parses "-12.5", "7", "0.75" or a fraction "1/3". Leading '+' is accepted.
// Exponents, whitespace and empty strings are rejected.
std::optional<Rational> parse_rational(std::string_view text);

// Shortest exact text: a decimal when the denominator has only factors 2
// and 5 ("12.5", "-7", "0.0625"), otherwise a reduced fraction ("1/3").
// parse_rational(format_rational(x)) == x for every x.
std::string format_rational(const Rational& value);

// Same as format_rational but always carries a sign ("+7", "-7", "0").
std::string format_signed(const Rational& value);

}  // namespace conncalc

#endif  // CONNCALC_RATIONAL_HPP
