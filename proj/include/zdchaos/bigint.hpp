//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdchaos {

// Path indices at deep levels grow like 5^n, so every index, length and
// schedule entry is an unbounded integer.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &v) { return v.str(); }

inline BigInt from_decimal(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("bad integer literal: " + s);
  return BigInt(s);
}

// Narrowing that refuses to truncate.
inline std::int64_t to_int64(const BigInt &v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " +
                              to_decimal(v));
  return static_cast<std::int64_t>(v);
}

// Mathematical modulus, always in [0, m).
inline BigInt floor_mod(const BigInt &a, const BigInt &m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace zdchaos
