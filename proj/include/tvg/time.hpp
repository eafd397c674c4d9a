#pragma once

#include <charconv>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tvg/error.hpp"

namespace tvg {

/// A day on the discrete lifetime axis. Day 0 is 1992-01-01.
struct TimeInstant {
  std::int64_t value = 0;

  constexpr TimeInstant() = default;
  constexpr explicit TimeInstant(std::int64_t v) : value(v) {}

  friend constexpr auto operator<=>(TimeInstant, TimeInstant) = default;

  constexpr TimeInstant operator+(std::int64_t days) const { return TimeInstant{value + days}; }
  constexpr std::int64_t operator-(TimeInstant other) const { return value - other.value; }
};

namespace detail {

inline constexpr std::chrono::sys_days kEpoch =
    std::chrono::sys_days{std::chrono::year{1992} / std::chrono::January / 1};

inline bool parse_uint(std::string_view text, unsigned& out) {
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace detail

/// Exact calendar conversion. Throws on invalid dates or dates before the epoch.
inline TimeInstant from_calendar(int year, unsigned month, unsigned day) {
  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) {
    throw Error(ErrorKind::invalid_argument, "invalid calendar date " + std::to_string(year) +
                                                 "-" + std::to_string(month) + "-" +
                                                 std::to_string(day));
  }
  auto days_since = (sys_days{ymd} - detail::kEpoch).count();
  if (days_since < 0)
    throw Error(ErrorKind::invalid_argument, "date precedes 1992-01-01");
  return TimeInstant{days_since};
}

struct CalendarDate {
  int year;
  unsigned month;
  unsigned day;
};

inline CalendarDate to_calendar(TimeInstant t) {
  using namespace std::chrono;
  year_month_day ymd{detail::kEpoch + days{t.value}};
  return {static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
          static_cast<unsigned>(ymd.day())};
}

/// "YYYY-MM-DD", or "YYYY-MM" which maps to the first of the month.
inline std::optional<TimeInstant> try_parse_date(std::string_view text) {
  if (text.size() != 7 && text.size() != 10) return std::nullopt;
  if (text[4] != '-') return std::nullopt;
  unsigned y = 0, m = 0, d = 1;
  if (!detail::parse_uint(text.substr(0, 4), y) || !detail::parse_uint(text.substr(5, 2), m))
    return std::nullopt;
  if (text.size() == 10) {
    if (text[7] != '-' || !detail::parse_uint(text.substr(8, 2), d)) return std::nullopt;
  }
  try {
    return from_calendar(static_cast<int>(y), m, d);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::string to_iso(TimeInstant t) {
  auto [y, m, d] = to_calendar(t);
  char buf[16];
  auto put = [&](char* at, unsigned v, int width) {
    for (int i = width - 1; i >= 0; --i) {
      at[i] = static_cast<char>('0' + v % 10);
      v /= 10;
    }
  };
  put(buf, static_cast<unsigned>(y), 4);
  buf[4] = '-';
  put(buf + 5, m, 2);
  buf[7] = '-';
  put(buf + 8, d, 2);
  return std::string(buf, 10);
}

/// Half-open [start, end) with start < end.
struct Interval {
  TimeInstant start;
  TimeInstant end;

  Interval(TimeInstant s, TimeInstant e) : start(s), end(e) {
    if (s.value < 0 || !(s < e))
      throw Error(ErrorKind::invalid_argument,
                  "invalid interval [" + std::to_string(s.value) + "," +
                      std::to_string(e.value) + ")");
  }
  Interval(std::int64_t s, std::int64_t e) : Interval(TimeInstant{s}, TimeInstant{e}) {}

  std::int64_t length() const { return end - start; }
  bool contains(TimeInstant t) const { return start <= t && t < end; }
  bool contains(const Interval& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const Interval& other) const { return start < other.end && other.start < end; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.start.value) + "," + std::to_string(iv.end.value) + ")";
}

}  // namespace tvg
