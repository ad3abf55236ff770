#include "cryptosent/time_util.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace cryptosent {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
// Howard Hinnant's days_from_civil algorithm.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

bool parse_uint(std::string_view s, size_t pos, size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int value = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

}  // namespace

std::optional<UtcSeconds> parse_timestamp(std::string_view text) {
  // Trim surrounding spaces.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  // Plain integer: epoch seconds.
  {
    bool all_digits = true;
    size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) all_digits = false;
    for (size_t i = start; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        all_digits = false;
        break;
      }
    }
    if (all_digits) {
      std::int64_t v = 0;
      auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
      return v;
    }
  }

  // ISO-8601 date-time.
  int year, month, day, hour, minute, second;
  if (!parse_uint(text, 0, 4, year)) return std::nullopt;
  if (text.size() < 19 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') return std::nullopt;
  if (text[13] != ':' || text[16] != ':') return std::nullopt;
  if (!parse_uint(text, 5, 2, month) || !parse_uint(text, 8, 2, day) ||
      !parse_uint(text, 11, 2, hour) || !parse_uint(text, 14, 2, minute) ||
      !parse_uint(text, 17, 2, second))
    return std::nullopt;

  if (month < 1 || month > 12) return std::nullopt;
  int dim = kDaysInMonth[month - 1] + (month == 2 && is_leap(year) ? 1 : 0);
  if (day < 1 || day > dim) return std::nullopt;
  if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
  if (second == 60) second = 59;  // clamp leap seconds

  size_t pos = 19;
  // Optional fractional seconds, truncated.
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }

  std::int64_t offset = 0;
  if (pos < text.size()) {
    char c = text[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int oh, om = 0;
      if (!parse_uint(text, pos + 1, 2, oh)) return std::nullopt;
      size_t opos = pos + 3;
      if (opos < text.size() && text[opos] == ':') ++opos;
      if (opos < text.size()) {
        if (!parse_uint(text, opos, 2, om)) return std::nullopt;
        opos += 2;
      }
      if (oh > 23 || om > 59) return std::nullopt;
      offset = (c == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
      pos = opos;
    } else {
      return std::nullopt;
    }
  }
  if (pos != text.size()) return std::nullopt;

  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  return days * 86400LL + hour * 3600LL + minute * 60LL + second - offset;
}

std::string format_timestamp(UtcSeconds t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

UtcSeconds floor_to_minute(UtcSeconds t) {
  UtcSeconds q = t / 60;
  if (t % 60 < 0) --q;
  return q * 60;
}

UtcSeconds ceil_to_next_minute(UtcSeconds t) { return floor_to_minute(t) + 60; }

}  // namespace cryptosent
