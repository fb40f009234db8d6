#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace misinfo {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

namespace timeutil {

namespace detail {

inline bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

inline std::optional<Date> make_date(int y, int m, int d) {
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date{ymd};
}

inline int month_from_abbrev(std::string_view m) {
  static constexpr std::string_view kMonths[12] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  for (int i = 0; i < 12; ++i) {
    if (kMonths[i] == m) return i + 1;
  }
  return 0;
}

// Legacy v1.1 form: "Wed Mar 04 12:00:00 +0000 2020".
inline std::optional<Timestamp> parse_legacy(std::string_view s) {
  if (s.size() != 30 || s[3] != ' ' || s[7] != ' ' || s[10] != ' ' || s[19] != ' ' || s[25] != ' ')
    return std::nullopt;
  const int mon = month_from_abbrev(s.substr(4, 3));
  int d = 0, hh = 0, mm = 0, ss = 0, y = 0, off_h = 0, off_m = 0;
  if (mon == 0 || !read_int(s, 8, 2, d) || !read_int(s, 11, 2, hh) || !read_int(s, 14, 2, mm) ||
      !read_int(s, 17, 2, ss) || !read_int(s, 26, 4, y) || !read_int(s, 21, 2, off_h) ||
      !read_int(s, 23, 2, off_m) || (s[20] != '+' && s[20] != '-'))
    return std::nullopt;
  const auto date = make_date(y, mon, d);
  if (!date || hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  const int sign = s[20] == '-' ? -1 : 1;
  return Timestamp{*date} + std::chrono::hours{hh} + std::chrono::minutes{mm} +
         std::chrono::seconds{ss} - sign * (std::chrono::hours{off_h} + std::chrono::minutes{off_m});
}

}  // namespace detail

// "YYYY-MM-DD".
inline std::optional<Date> parse_date(std::string_view s) {
  int y = 0, m = 0, d = 0;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' || !detail::read_int(s, 0, 4, y) ||
      !detail::read_int(s, 5, 2, m) || !detail::read_int(s, 8, 2, d))
    return std::nullopt;
  return detail::make_date(y, m, d);
}

// ISO-8601 "YYYY-MM-DDTHH:MM:SS[.fff][Z|+HH:MM|-HH:MM]" (a space may replace
// 'T'), or the legacy Twitter form. Fractional seconds are truncated.
// A bare date is midnight UTC.
inline std::optional<Timestamp> parse_timestamp(std::string_view s) {
  if (s.size() == 10) {
    if (auto d = parse_date(s)) return Timestamp{*d};
    return std::nullopt;
  }
  if (auto legacy = detail::parse_legacy(s)) return legacy;
  int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
  if (s.size() < 19 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
      s[13] != ':' || s[16] != ':' || !detail::read_int(s, 0, 4, y) || !detail::read_int(s, 5, 2, mo) ||
      !detail::read_int(s, 8, 2, d) || !detail::read_int(s, 11, 2, hh) ||
      !detail::read_int(s, 14, 2, mm) || !detail::read_int(s, 17, 2, ss))
    return std::nullopt;
  const auto date = detail::make_date(y, mo, d);
  if (!date || hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t digits_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == digits_start) return std::nullopt;
  }
  std::chrono::seconds offset{0};
  if (pos == s.size() || (pos + 1 == s.size() && s[pos] == 'Z')) {
    // UTC
  } else if (pos + 6 == s.size() && (s[pos] == '+' || s[pos] == '-') && s[pos + 3] == ':') {
    int oh = 0, om = 0;
    if (!detail::read_int(s, pos + 1, 2, oh) || !detail::read_int(s, pos + 4, 2, om))
      return std::nullopt;
    offset = std::chrono::hours{oh} + std::chrono::minutes{om};
    if (s[pos] == '-') offset = -offset;
  } else {
    return std::nullopt;
  }
  return Timestamp{*date} + std::chrono::hours{hh} + std::chrono::minutes{mm} +
         std::chrono::seconds{ss} - offset;
}

inline Date date_of(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }

inline std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

inline std::string format_timestamp(Timestamp t) {
  const Date d = date_of(t);
  const auto secs = (t - Timestamp{d}).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02lld:%02lld:%02lldZ", format_date(d).c_str(),
                static_cast<long long>(secs / 3600), static_cast<long long>((secs / 60) % 60),
                static_cast<long long>(secs % 60));
  return buf;
}

}  // namespace timeutil
}  // namespace misinfo
