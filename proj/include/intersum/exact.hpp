#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "intersum/error.hpp"

namespace intersum {

// Exact signed integer used for every omega value, bound and count.
// Arithmetic goes through the checked helpers below; wrap-around is an error.
using Exact = __int128;

inline Exact checked_add(Exact a, Exact b) {
  Exact r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit addition overflow");
  return r;
}

inline Exact checked_sub(Exact a, Exact b) {
  Exact r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit subtraction overflow");
  return r;
}

inline Exact checked_mul(Exact a, Exact b) {
  Exact r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit multiplication overflow");
  return r;
}

std::string to_decimal(Exact v);

// Inverse of to_decimal; throws Parse on malformed input and Overflow when out of range.
Exact parse_decimal(std::string_view text);

}  // namespace intersum
