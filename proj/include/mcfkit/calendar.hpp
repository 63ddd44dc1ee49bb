#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mcfkit {

// Naive local timestamps: seconds on a proleptic Gregorian timeline with no
// timezone semantics. Day serials count civil days on the same timeline.

// Serial day number for a calendar date (1970-01-01 -> 0).
std::int64_t civil_day_serial(int year, int month, int day);

void civil_from_serial(std::int64_t serial, int& year, int& month, int& day);

// Parses "YYYY-MM-DD HH:MM:SS" into seconds since 1970-01-01 00:00:00.
// Returns nullopt on malformed input.
std::optional<std::int64_t> parse_timestamp(std::string_view text);

std::string format_timestamp(std::int64_t seconds);

// "YYYY-MM-DD" for a day serial.
std::string format_civil_day(std::int64_t serial);

inline std::int64_t day_of_timestamp(std::int64_t seconds) {
  // floor division so pre-1970 timestamps land on the right day
  std::int64_t d = seconds / 86400;
  if (seconds % 86400 < 0) --d;
  return d;
}

}  // namespace mcfkit
