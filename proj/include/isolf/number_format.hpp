#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

namespace isolf {

/// Shortest decimal form that parses back to the same double.
inline std::string format_exact(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buf, end);
}

/// Fixed-point rendering with half-up rounding at `precision` decimals
/// (57.158333 -> "57.2", 57.25 -> "57.3" at precision 1). Rounds the decimal
/// expansion of the value, so results near a decimal boundary land where a
/// reader of the exact value expects.
inline std::string format_rounded(double value, int precision) {
  // 12 fractional guard digits decide ties; precision stays small (<= 6).
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string text = buf;

  bool negative = !text.empty() && text[0] == '-';
  if (negative) {
    text.erase(text.begin());
  }

  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t int_len = dot;
  std::size_t keep = int_len + static_cast<std::size_t>(precision);

  bool round_up = keep < digits.size() && digits[keep] >= '5';
  digits.resize(keep);
  if (round_up) {
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
      if (i == 0) {
        digits.insert(digits.begin(), '1');
        ++int_len;
      }
    }
  }

  std::string out = digits.substr(0, int_len);
  if (out.empty()) {
    out = "0";
  }
  if (precision > 0) {
    out += '.';
    out += digits.substr(int_len);
  }

  bool all_zero = out.find_first_not_of("0.") == std::string::npos;
  if (negative && !all_zero) {
    out.insert(out.begin(), '-');
  }
  return out;
}

}  // namespace isolf
