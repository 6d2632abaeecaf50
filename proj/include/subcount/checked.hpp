//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>

#include "subcount/error.hpp"

namespace subcount {

using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Division that must leave no remainder. A remainder means the caller's
/// counting identity is broken.
inline Count exact_div(Count a, Count d, const char* what = "exact division") {
  if (d == 0) throw InternalError(std::string(what) + ": division by zero");
  if (a % d != 0) {
    throw InternalError(std::string(what) + ": " + std::to_string(a) + " is not divisible by " +
                        std::to_string(d));
  }
  return a / d;
}

}  // namespace subcount
