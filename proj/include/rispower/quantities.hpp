// Exact fixed-point physical quantities.
//
// Every power handled by this library is an integer number of microwatts;
// energies are integer picojoules (1 uW x 1 us = 1 pJ). Arithmetic is
// checked: overflow raises OverflowError instead of wrapping.

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "rispower/errors.hpp"

namespace rispower {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("addition overflows 64-bit range");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("multiplication overflows 64-bit range");
  return r;
}

}  // namespace detail

/// Non-negative power in integer microwatts.
struct PowerMicrowatts {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(PowerMicrowatts, PowerMicrowatts) = default;

  PowerMicrowatts operator+(PowerMicrowatts other) const {
    return {detail::checked_add(value, other.value)};
  }
  PowerMicrowatts& operator+=(PowerMicrowatts other) {
    value = detail::checked_add(value, other.value);
    return *this;
  }
  /// Scale by a non-negative integer count.
  PowerMicrowatts operator*(std::uint64_t count) const {
    return {detail::checked_mul(value, count)};
  }
};

/// Positive dwell time in integer microseconds.
class DurationMicroseconds {
public:
  explicit DurationMicroseconds(std::uint64_t us) : value_(us) {
    if (us == 0) throw DomainError("duration must be at least 1 us");
  }

  std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(DurationMicroseconds, DurationMicroseconds) = default;

  DurationMicroseconds operator+(DurationMicroseconds other) const {
    return DurationMicroseconds(detail::checked_add(value_, other.value_));
  }

private:
  std::uint64_t value_;
};

/// Non-negative energy in integer picojoules.
struct EnergyPicojoules {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(EnergyPicojoules, EnergyPicojoules) = default;

  EnergyPicojoules operator+(EnergyPicojoules other) const {
    return {detail::checked_add(value, other.value)};
  }
  EnergyPicojoules& operator+=(EnergyPicojoules other) {
    value = detail::checked_add(value, other.value);
    return *this;
  }
};

/// Exact energy of holding power `p` for duration `d`.
inline EnergyPicojoules energy(PowerMicrowatts p, DurationMicroseconds d) {
  return {detail::checked_mul(p.value, d.value())};
}

enum class PowerUnit { microwatt, milliwatt, watt };

namespace detail {

struct PowerUnitInfo {
  std::string_view suffix;
  std::uint64_t microwatts_per_unit;
  unsigned max_fraction_digits;
};

constexpr PowerUnitInfo power_unit_info(PowerUnit unit) {
  switch (unit) {
    case PowerUnit::microwatt: return {"uW", 1, 0};
    case PowerUnit::milliwatt: return {"mW", 1000, 3};
    case PowerUnit::watt:      return {"W", 1000000, 6};
  }
  return {"uW", 1, 0};
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses `<decimal><space?><uW|mW|W>` into exact microwatts.
///
/// The fractional part may carry at most 6 digits for W, 3 for mW and none
/// for uW, so any accepted text is exactly representable. Inputs that would
/// need sub-microwatt resolution raise PrecisionError; negative values raise
/// DomainError; anything else malformed raises ParseError.
inline PowerMicrowatts parse_power(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty power value");
  if (s.front() == '-') throw DomainError("power must be non-negative: '" + std::string(text) + "'");

  std::size_t pos = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == 0) throw ParseError("expected a decimal number: '" + std::string(text) + "'");
  const std::string_view int_digits = s.substr(0, pos);

  std::string_view frac_digits;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t frac_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    frac_digits = s.substr(frac_begin, pos - frac_begin);
    if (frac_digits.empty())
      throw ParseError("missing digits after decimal point: '" + std::string(text) + "'");
  }

  std::string_view rest = s.substr(pos);
  if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);

  PowerUnit unit{};
  if (rest == "uW") unit = PowerUnit::microwatt;
  else if (rest == "mW") unit = PowerUnit::milliwatt;
  else if (rest == "W") unit = PowerUnit::watt;
  else throw ParseError("unknown power unit '" + std::string(rest) + "' (expected uW, mW or W)");

  const auto info = detail::power_unit_info(unit);
  if (frac_digits.size() > info.max_fraction_digits)
    throw PrecisionError("'" + std::string(text) + "' is finer than 1 uW (at most " +
                         std::to_string(info.max_fraction_digits) + " fractional digits for " +
                         std::string(info.suffix) + ")");

  std::uint64_t whole = 0;
  const auto [ptr, ec] = std::from_chars(int_digits.begin(), int_digits.end(), whole);
  if (ec == std::errc::result_out_of_range) throw OverflowError("power value exceeds 64-bit microwatt range");
  if (ec != std::errc() || ptr != int_digits.end()) throw ParseError("bad decimal number: '" + std::string(text) + "'");

  // Pad the fraction to the unit's full resolution, e.g. "4.8 W" -> 800000 uW.
  std::uint64_t frac_uw = 0;
  std::uint64_t place = info.microwatts_per_unit;
  for (char c : frac_digits) {
    place /= 10;
    frac_uw += static_cast<std::uint64_t>(c - '0') * place;
  }

  return {detail::checked_add(detail::checked_mul(whole, info.microwatts_per_unit), frac_uw)};
}

/// Renders `p` in the requested unit with the shortest exact decimal,
/// e.g. 2112 uW as mW -> "2.112 mW", 1720000 uW as mW -> "1720 mW".
/// All three units represent any integer microwatt value exactly, so
/// parse_power(format_power(p, u)) == p always holds.
inline std::string format_power(PowerMicrowatts p, PowerUnit unit) {
  const auto info = detail::power_unit_info(unit);
  const std::uint64_t whole = p.value / info.microwatts_per_unit;
  std::uint64_t remainder = p.value % info.microwatts_per_unit;

  std::string out = std::to_string(whole);
  if (remainder != 0) {
    std::string frac(info.max_fraction_digits, '0');
    std::uint64_t place = info.microwatts_per_unit;
    for (unsigned i = 0; i < info.max_fraction_digits; ++i) {
      place /= 10;
      frac[i] = static_cast<char>('0' + remainder / place);
      remainder %= place;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += '.';
    out += frac;
  }
  out += ' ';
  out += info.suffix;
  return out;
}

/// Renders `p` in the largest unit that keeps the text short: W from 1 W
/// up, mW from 1 mW up, uW below that. Always exact.
inline std::string display_power(PowerMicrowatts p) {
  if (p.value >= 1000000) return format_power(p, PowerUnit::watt);
  if (p.value >= 1000) return format_power(p, PowerUnit::milliwatt);
  return format_power(p, PowerUnit::microwatt);
}

inline namespace literals {

constexpr PowerMicrowatts operator""_uW(unsigned long long v) {
  return {static_cast<std::uint64_t>(v)};
}
inline PowerMicrowatts operator""_mW(unsigned long long v) {
  return {detail::checked_mul(static_cast<std::uint64_t>(v), 1000)};
}
inline PowerMicrowatts operator""_W(unsigned long long v) {
  return {detail::checked_mul(static_cast<std::uint64_t>(v), 1000000)};
}
inline DurationMicroseconds operator""_us(unsigned long long v) {
  return DurationMicroseconds(static_cast<std::uint64_t>(v));
}

}  // namespace literals

}  // namespace rispower
