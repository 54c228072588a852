// Copyright 2026 The punmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "punmine/errors.hpp"

namespace punmine {

/// Utility value in scaled integer units (external utility x 10^precision).
/// Every arithmetic operation is overflow-checked and throws OverflowError.
class Amount {
 public:
  constexpr Amount() = default;
  constexpr explicit Amount(std::int64_t raw) : raw_(raw) {}

  constexpr std::int64_t raw() const { return raw_; }

  Amount& operator+=(Amount other) {
    if (__builtin_add_overflow(raw_, other.raw_, &raw_)) throw OverflowError("utility sum overflows int64");
    return *this;
  }
  Amount& operator-=(Amount other) {
    if (__builtin_sub_overflow(raw_, other.raw_, &raw_)) throw OverflowError("utility difference overflows int64");
    return *this;
  }
  friend Amount operator+(Amount a, Amount b) { return a += b; }
  friend Amount operator-(Amount a, Amount b) { return a -= b; }

  /// count x unit utility, e.g. c(i,T) x v(i).
  static Amount product(std::int64_t count, Amount unit) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(count, unit.raw_, &out)) throw OverflowError("utility product overflows int64");
    return Amount(out);
  }

  friend constexpr auto operator<=>(Amount, Amount) = default;

 private:
  std::int64_t raw_ = 0;
};

/// Number of digits after the decimal point in a plain decimal literal.
int fractional_digits(std::string_view text);

/// Parses a non-negative plain decimal ("30", "0.01", "1.5") into scaled units
/// at `precision`. Throws InputError when the literal is malformed or carries
/// more fractional digits than `precision`, OverflowError when out of range.
Amount parse_decimal(std::string_view text, int precision);

/// Renders scaled units with exactly `precision` fractional digits.
std::string format_amount(Amount value, int precision);

/// Exact non-negative fraction; used for ratio thresholds and statistics.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
};

/// Parses a decimal literal into an exact rational (no floating point).
Rational parse_rational(std::string_view text);

}  // namespace punmine
