// Copyright 2026 The truthful-arch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include "truthful_arch/error.h"
#include "truthful_arch/rational.h"

namespace truthful_arch {
namespace {

Integer PowerOfTen(int exponent) {
  Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

Integer ParseDigits(std::string_view digits) {
  Integer value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

[[noreturn]] void Reject(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParseError, "invalid number \"" + std::string(text) +
                                          "\": " + std::string(why));
}

}  // namespace

Rational ParseDecimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) Reject(text, "no digits");

  try {
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
      std::string_view num = rest.substr(0, slash);
      std::string_view den = rest.substr(slash + 1);
      if (num.empty() || den.empty()) Reject(text, "malformed fraction");
      for (char c : num)
        if (!IsDigit(c)) Reject(text, "malformed fraction");
      for (char c : den)
        if (!IsDigit(c)) Reject(text, "malformed fraction");
      Integer d = ParseDigits(den);
      if (d == 0) Reject(text, "zero denominator");
      Integer n = ParseDigits(num);
      return Rational(negative ? Integer(-n) : n, d);
    }

    std::string_view whole = rest;
    std::string_view fraction;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
      whole = rest.substr(0, dot);
      fraction = rest.substr(dot + 1);
      if (whole.empty() && fraction.empty()) Reject(text, "no digits");
    }
    for (char c : whole)
      if (!IsDigit(c)) Reject(text, "unexpected character");
    for (char c : fraction)
      if (!IsDigit(c)) Reject(text, "unexpected character");

    Integer scale = PowerOfTen(static_cast<int>(fraction.size()));
    Integer n = ParseDigits(whole) * scale + ParseDigits(fraction);
    return Rational(negative ? Integer(-n) : n, scale);
  } catch (const std::overflow_error&) {
    Reject(text, "out of representable range");
  }
}

std::string ToExactString(const Rational& value) {
  Integer den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    return value.numerator().str() + "/" + value.denominator().str();
  }
  return FormatDecimal(value, std::max(twos, fives));
}

std::string FormatDecimal(const Rational& value, int decimals) {
  if (decimals < 0) decimals = 0;
  const Integer num = value.numerator();
  const Integer den = value.denominator();
  const Integer magnitude = num < 0 ? Integer(-num) : num;
  const Integer scaled = magnitude * PowerOfTen(decimals);
  Integer quotient = scaled / den;
  const Integer remainder = scaled % den;
  if (remainder * 2 >= den) quotient += 1;

  std::string digits = quotient.str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, decimals + 1 - digits.size(), '0');
  }
  std::string out;
  if (num < 0 && quotient != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - decimals);
  if (decimals > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - decimals, std::string::npos);
  }
  return out;
}

double ToDouble(const Rational& value) {
  return value.numerator().convert_to<double>() /
         value.denominator().convert_to<double>();
}

}  // namespace truthful_arch
