// Copyright 2026 The meander Authors.
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

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace meander {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(std::int64_t e) {
  BigInt p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline BigInt pow_int(BigInt base, std::uint64_t e) {
  BigInt result = 1;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const Rational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Natural log of a positive rational, stable for values whose numerator or
/// denominator do not fit in a double.
inline double log_of(const Rational& q) {
  auto log_big = [](BigInt v) {
    // Shift off low bits so the remainder converts without overflow.
    const std::size_t bits = v == 0 ? 0 : boost::multiprecision::msb(v) + 1;
    std::size_t shift = bits > 900 ? bits - 900 : 0;
    v >>= shift;
    return std::log(v.convert_to<double>()) +
           static_cast<double>(shift) * std::log(2.0);
  };
  return log_big(numerator_of(q)) - log_big(denominator_of(q));
}

}  // namespace meander
