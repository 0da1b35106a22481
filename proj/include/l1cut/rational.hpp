// Copyright 2026 The l1cut Authors
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

#pragma once

// Exact rational arithmetic. Every distance, weight and probability in the
// library is a Rat; nothing is ever rounded except for display.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "l1cut/error.hpp"

namespace l1cut {

using Integer = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Canonical rational num/den. The sign always lives in the numerator.
inline Rat rat(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InputError("rational with zero denominator");
  }
  return Rat(num, den);
}

inline Rat rat(std::int64_t num, std::int64_t den = 1) {
  return rat(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rat& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rat& q) {
  return boost::multiprecision::denominator(q);
}

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rat& q) {
  const Integer den = denominator_of(q);
  if (den == 1) {
    return numerator_of(q).str();
  }
  return numerator_of(q).str() + "/" + den.str();
}

/// Human-readable decimal with the given number of significant digits.
/// Display only; never parsed back.
inline std::string to_decimal(const Rat& q, int significant_digits = 6) {
  std::ostringstream out;
  out << std::setprecision(significant_digits) << q.convert_to<double>();
  return out.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p/q", "p", or a plain decimal such as "-0.125". Decimals are
/// converted exactly (0.1 becomes 1/10).
inline Rat parse_rat(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) {
    throw InputError("empty rational");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = detail::parse_integer(text.substr(0, slash), whole);
    const Integer den = detail::parse_integer(text.substr(slash + 1), whole);
    return rat(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    // Strip leading zeros: the string constructor reads "0..." as octal.
    std::string all = std::string(int_part) + std::string(frac_part);
    all.erase(0, std::min(all.find_first_not_of('0'), all.size() - 1));
    if (all.empty()) all = "0";
    Integer digits{all};
    return rat(negative ? Integer(-digits) : digits, scale);
  }
  return Rat(detail::parse_integer(text, whole));
}

inline Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Integer floor_of(const Rat& q) {
  Integer quotient = numerator_of(q) / denominator_of(q);  // truncates
  if (q < 0 && Rat(quotient) != q) {
    quotient -= 1;
  }
  return quotient;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

/// The rational with the smallest denominator in the closed interval
/// [lo, hi], 0 < lo <= hi. Continued-fraction descent.
inline Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (lo <= 0 || hi < lo) {
    throw InputError("simplest_between needs 0 < lo <= hi");
  }
  const Integer fl = floor_of(lo);
  if (Rat(fl) == lo) {
    return lo;
  }
  if (Rat(fl + 1) <= hi) {
    return Rat(fl + 1);
  }
  // lo and hi share the integer part; recurse on the reciprocal fractional parts.
  const Rat inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rat(fl) + 1 / inner;
}

/// Replaces a positive value by the simplest rational within relative error
/// `relative_error`. A zero tolerance returns the input unchanged.
inline Rat approximate(const Rat& value, const Rat& relative_error) {
  if (value <= 0) {
    throw InputError("approximate needs a positive value");
  }
  if (relative_error < 0 || relative_error >= 1) {
    throw InputError("approximation tolerance must lie in [0, 1)");
  }
  if (relative_error == 0) {
    return value;
  }
  return simplest_between(value * (1 - relative_error), value * (1 + relative_error));
}

}  // namespace l1cut
