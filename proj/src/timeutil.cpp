#include "bugloc/timeutil.hpp"

#include <array>
#include <cstdio>

#include "bugloc/error.hpp"

namespace bugloc {
namespace {

// Howard Hinnant's civil-date algorithms.
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

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int read_int(std::string_view s, size_t pos, size_t len) {
  int v = 0;
  for (size_t i = 0; i < len; ++i) {
    if (pos + i >= s.size() || !is_digit(s[pos + i]))
      throw Error("bad-timestamp", "expected digit in '" + std::string(s) + "'");
    v = v * 10 + (s[pos + i] - '0');
  }
  return v;
}

}  // namespace

std::int64_t parse_rfc3339(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS[.fff](Z|+hh:mm|-hh:mm)
  if (text.size() < 20)
    throw Error("bad-timestamp", "too short: '" + std::string(text) + "'");
  const int year = read_int(text, 0, 4);
  const int month = read_int(text, 5, 2);
  const int day = read_int(text, 8, 2);
  const int hour = read_int(text, 11, 2);
  const int min = read_int(text, 14, 2);
  const int sec = read_int(text, 17, 2);
  if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
      text[13] != ':' || text[16] != ':')
    throw Error("bad-timestamp", "malformed: '" + std::string(text) + "'");
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || min > 59 || sec > 60)
    throw Error("bad-timestamp", "field out of range: '" + std::string(text) + "'");

  size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;  // truncate fraction
  }
  std::int64_t offset = 0;
  if (pos >= text.size())
    throw Error("bad-timestamp", "missing offset: '" + std::string(text) + "'");
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    const int sign = text[pos] == '+' ? 1 : -1;
    const int oh = read_int(text, pos + 1, 2);
    if (pos + 3 >= text.size() || text[pos + 3] != ':')
      throw Error("bad-timestamp", "malformed offset: '" + std::string(text) + "'");
    const int om = read_int(text, pos + 4, 2);
    offset = sign * (oh * 3600 + om * 60);
    pos += 6;
  } else {
    throw Error("bad-timestamp", "malformed offset: '" + std::string(text) + "'");
  }
  if (pos != text.size())
    throw Error("bad-timestamp", "trailing characters: '" + std::string(text) + "'");

  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  return days * 86400 + hour * 3600 + min * 60 + sec - offset;
}

std::string format_rfc3339(std::int64_t t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d, static_cast<long long>(rem / 3600),
                static_cast<long long>((rem % 3600) / 60), static_cast<long long>(rem % 60));
  return buf;
}

int utc_year(std::int64_t t) {
  std::int64_t days = t / 86400;
  if (t % 86400 < 0) days -= 1;
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  return static_cast<int>(y);
}

std::int64_t jan1_epoch(int year) { return days_from_civil(year, 1, 1) * 86400; }

}  // namespace bugloc
