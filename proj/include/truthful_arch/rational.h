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

#ifndef TRUTHFUL_ARCH_RATIONAL_H_
#define TRUTHFUL_ARCH_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace truthful_arch {

// Exact rational arithmetic. The 128-bit checked integer throws
// std::overflow_error instead of wrapping, so a result is either exact or
// an exception.
using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

// Parses "62.33", "-90", "+5", "0.5" and the fraction form "170/3".
// Throws Error(kParseError) on anything else.
Rational ParseDecimal(std::string_view text);

// Shortest exact text: a terminating decimal when the denominator only has
// factors 2 and 5, otherwise "p/q".
std::string ToExactString(const Rational& value);

// Fixed-point rendering with `decimals` digits, rounding half away from
// zero ("round half up" on magnitudes): 187/270 -> "0.69", -1/4 -> "-0.25".
std::string FormatDecimal(const Rational& value, int decimals);

// Nearest double, for display and the Python bindings only.
double ToDouble(const Rational& value);

}  // namespace truthful_arch

#endif  // TRUTHFUL_ARCH_RATIONAL_H_
