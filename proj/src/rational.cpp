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

#include "conncalc/rational.hpp"

#include <cctype>

namespace conncalc {

namespace {

using Integer = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer to_integer(std::string_view digits) {
  Integer out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d = to_integer(den);
    if (d == 0) return std::nullopt;
    value = Rational(to_integer(num), d);
  } else {
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    if (!all_digits(whole)) return std::nullopt;
    Integer num = to_integer(whole);
    Integer den = 1;
    if (dot != std::string_view::npos) {
      auto frac = text.substr(dot + 1);
      if (!all_digits(frac)) return std::nullopt;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
    }
    value = Rational(num, den);
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  // Count the 2s and 5s; anything else means a repeating decimal.
  Integer rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) {
    return sign + num.str() + "/" + den.str();
  }
  unsigned places = std::max(twos, fives);
  Integer scale = boost::multiprecision::pow(Integer(10), places);
  Integer scaled = num * (scale / den);
  std::string digits = scaled.str();
  if (places == 0) return sign + digits;
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return sign + digits;
}

std::string format_signed(const Rational& value) {
  if (value > 0) return "+" + format_rational(value);
  return format_rational(value);
}

}  // namespace conncalc
