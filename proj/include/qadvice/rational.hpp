// Copyright 2026 The qadvice Authors
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

#ifndef QADVICE_RATIONAL_HPP_
#define QADVICE_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <type_traits>

#include "qadvice/errors.hpp"

namespace qadvice {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "n", "-n" or "n/d". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer d(std::string{den});
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(Integer(std::string{num}), d);
}

// Reduced fraction; integers print without a denominator.
inline std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }
inline double to_double(double value) { return value; }

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

// Brings an exact value into the scalar field used for an evaluation.
template <class Scalar>
Scalar scalar_from(const Rational& value) {
  if constexpr (is_exact_v<Scalar>) {
    return value;
  } else {
    return static_cast<Scalar>(to_double(value));
  }
}

}  // namespace qadvice

#endif  // QADVICE_RATIONAL_HPP_
