#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace echograph {

namespace detail {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
inline std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m,
                            unsigned& d) {
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

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

// Parses an RFC 3339 timestamp ("2021-06-18T12:00:00Z", optional fractional
// seconds, optional +hh:mm / -hh:mm offset) into UTC epoch seconds.
// Fractional seconds are truncated.
inline std::optional<std::int64_t> parse_rfc3339(std::string_view s) {
  int y, mon, day, h, min, sec;
  int n = 0;
  if (std::sscanf(std::string(s).c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &y,
                  &mon, &day, &h, &min, &sec, &n) != 6 ||
      n != 19)
    return std::nullopt;
  if (mon < 1 || mon > 12 || day < 1 || day > 31 || h > 23 || min > 59 ||
      sec > 60)
    return std::nullopt;

  std::string_view rest = s.substr(19);
  if (!rest.empty() && rest.front() == '.') {
    std::size_t i = 1;
    while (i < rest.size() &&
           std::isdigit(static_cast<unsigned char>(rest[i])))
      ++i;
    if (i == 1) return std::nullopt;
    rest = rest.substr(i);
  }

  std::int64_t offset = 0;
  if (rest == "Z" || rest == "z") {
    // UTC
  } else if (rest.size() == 6 && (rest[0] == '+' || rest[0] == '-') &&
             rest[3] == ':') {
    const std::string_view oh = rest.substr(1, 2), om = rest.substr(4, 2);
    if (!detail::all_digits(oh) || !detail::all_digits(om))
      return std::nullopt;
    offset = (std::stoi(std::string(oh)) * 60 + std::stoi(std::string(om))) *
             60;
    if (rest[0] == '-') offset = -offset;
  } else {
    return std::nullopt;
  }

  const std::int64_t days = detail::days_from_civil(y, mon, day);
  return days * 86400 + h * 3600 + min * 60 + sec - offset;
}

inline std::string format_rfc3339(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  std::int64_t y;
  unsigned m, d;
  detail::civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace echograph
