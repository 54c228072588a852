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

#include "punmine/amount.hpp"

#include <cctype>
#include <numeric>

namespace punmine {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct DecimalParts {
  std::string_view whole;
  std::string_view frac;
};

DecimalParts split_decimal(std::string_view text) {
  auto dot = text.find('.');
  DecimalParts parts{text, {}};
  if (dot != std::string_view::npos) {
    parts.whole = text.substr(0, dot);
    parts.frac = text.substr(dot + 1);
    if (parts.whole.empty()) parts.whole = "0";
    if (!all_digits(parts.frac)) throw InputError("malformed decimal '" + std::string(text) + "'");
  }
  if (!all_digits(parts.whole)) throw InputError("malformed decimal '" + std::string(text) + "'");
  return parts;
}

std::int64_t accumulate_digits(std::int64_t acc, std::string_view digits) {
  for (char c : digits) {
    if (__builtin_mul_overflow(acc, 10, &acc) || __builtin_add_overflow(acc, c - '0', &acc)) {
      throw OverflowError("decimal literal out of range");
    }
  }
  return acc;
}

}  // namespace

int fractional_digits(std::string_view text) {
  auto dot = text.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

Amount parse_decimal(std::string_view text, int precision) {
  auto parts = split_decimal(text);
  if (static_cast<int>(parts.frac.size()) > precision) {
    throw InputError("'" + std::string(text) + "' has more than " + std::to_string(precision) +
                     " fractional digits");
  }
  std::int64_t raw = accumulate_digits(0, parts.whole);
  raw = accumulate_digits(raw, parts.frac);
  for (int i = static_cast<int>(parts.frac.size()); i < precision; ++i) {
    if (__builtin_mul_overflow(raw, 10, &raw)) throw OverflowError("decimal literal out of range");
  }
  return Amount(raw);
}

std::string format_amount(Amount value, int precision) {
  std::string digits = std::to_string(value.raw() < 0 ? -value.raw() : value.raw());
  if (precision > 0) {
    if (static_cast<int>(digits.size()) <= precision) {
      digits.insert(0, static_cast<std::size_t>(precision + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  return value.raw() < 0 ? "-" + digits : digits;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InputError("rational with non-positive denominator");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

Rational parse_rational(std::string_view text) {
  auto parts = split_decimal(text);
  std::int64_t num = accumulate_digits(accumulate_digits(0, parts.whole), parts.frac);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < parts.frac.size(); ++i) {
    if (__builtin_mul_overflow(den, 10, &den)) throw OverflowError("decimal literal out of range");
  }
  return Rational::make(num, den);
}

}  // namespace punmine
