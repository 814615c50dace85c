#pragma once

// Presentation formatting. Numbers are rounded half away from zero at a fixed
// number of places; internal values are never rounded.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <system_error>

#include "ransomlot/econ.hpp"

namespace ransomlot {

/// `value` rounded half away from zero to `places` decimals (places <= 9).
/// Rounding is applied to value * 10^places as computed in binary64.
inline std::string format_fixed(double value, int places) {
  double scale = 1.0;
  for (int i = 0; i < places; ++i) {
    scale *= 10.0;
  }
  const double scaled = std::round(value * scale);  // half away from zero
  if (!(std::abs(scaled) < 0x1.0p63)) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
  }
  auto units = static_cast<std::int64_t>(scaled);
  const bool negative = units < 0;
  const std::uint64_t mag =
      negative ? static_cast<std::uint64_t>(-(units + 1)) + 1 : static_cast<std::uint64_t>(units);
  const auto ipow = static_cast<std::uint64_t>(scale);

  std::string out = negative ? "-" : "";
  out += std::to_string(mag / ipow);
  if (places > 0) {
    std::string frac = std::to_string(mag % ipow);
    out += '.';
    out.append(static_cast<std::size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}

inline std::string format_money(Money m) { return format_fixed(m.amount(), 2); }
inline std::string format_probability(Probability p) { return format_fixed(p.value(), 6); }
inline std::string format_probability(double p) { return format_fixed(p, 6); }
inline std::string format_ratio(double r) { return format_fixed(r, 4); }

/// Shortest plain decimal (no exponent) that parses back to the same double.
inline std::string format_exact(double value) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
  }
  std::string s(buf, end);
  if (s == "-0") {
    s = "0";
  }
  return s;
}

}  // namespace ransomlot
