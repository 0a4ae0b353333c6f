#include "intersum/exact.hpp"

#include <algorithm>

namespace intersum {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateSet: return "DuplicateSet";
    case Errc::BadElement: return "BadElement";
    case Errc::BadSize: return "BadSize";
    case Errc::BadLength: return "BadLength";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::Hypothesis: return "Hypothesis";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::NotExhaustive: return "NotExhaustive";
    case Errc::Counterexample: return "Counterexample";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

std::string to_decimal(Exact v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with the magnitude as unsigned so INT128_MIN is representable.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                   : static_cast<unsigned __int128>(v);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Exact parse_decimal(std::string_view text) {
  if (text.empty()) throw Error(Errc::Parse, "empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) throw Error(Errc::Parse, "malformed integer literal");
  Exact v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw Error(Errc::Parse, "malformed integer literal '" + std::string(text) + "'");
    v = checked_mul(v, 10);
    v = negative ? checked_sub(v, c - '0') : checked_add(v, c - '0');
  }
  return v;
}

}  // namespace intersum
