// Timestamp handling. All times are stored as epoch seconds in UTC; inputs
// may be integer epoch seconds or ISO-8601 strings.
#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <string>

#include "retnet/errors.hpp"

namespace retnet {

using Timestamp = std::int64_t; // epoch seconds, UTC

namespace timeutil {

constexpr std::int64_t seconds_per_day = 86400;
constexpr std::int64_t seconds_per_hour = 3600;

// Days since epoch for a civil date (proleptic Gregorian). Branch-free
// algorithm, valid far beyond the ranges we care about.
inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

// Inverse of days_from_civil.
inline void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

inline bool all_digits(const std::string& s, std::size_t from = 0) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Parses "YYYY-MM-DD[ T]hh:mm:ss[.fff][Z|±hh[:]mm]" or a bare integer of
// epoch seconds. Fractional seconds are truncated. A missing zone means UTC.
inline Timestamp parse_timestamp(const std::string& raw) {
    if (raw.empty()) throw DataError("empty timestamp");
    // Bare epoch seconds (optionally negative).
    if (all_digits(raw) || (raw[0] == '-' && all_digits(raw, 1)))
        return std::stoll(raw);

    int y, mo, d, h, mi, s;
    int n = 0;
    if (std::sscanf(raw.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d%n", &y, &mo, &d, &h,
                    &mi, &s, &n) != 6 || n == 0)
        throw DataError("unparseable timestamp: " + raw);
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60)
        throw DataError("timestamp field out of range: " + raw);

    std::size_t pos = static_cast<std::size_t>(n);
    if (pos < raw.size() && raw[pos] == '.') { // skip fractional seconds
        ++pos;
        while (pos < raw.size() && std::isdigit(static_cast<unsigned char>(raw[pos])))
            ++pos;
    }
    std::int64_t offset = 0;
    if (pos < raw.size()) {
        const char c = raw[pos];
        if (c == 'Z' || c == 'z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            int oh = 0, om = 0, consumed = 0;
            if (std::sscanf(raw.c_str() + pos + 1, "%2d:%2d%n", &oh, &om,
                            &consumed) >= 1 &&
                consumed == 5) {
                pos += 6;
            } else if (std::sscanf(raw.c_str() + pos + 1, "%2d%2d%n", &oh, &om,
                                   &consumed) >= 1 &&
                       consumed == 4) {
                pos += 5;
            } else if (std::sscanf(raw.c_str() + pos + 1, "%2d%n", &oh,
                                   &consumed) == 1 &&
                       consumed == 2) {
                pos += 3;
            } else {
                throw DataError("bad zone offset in timestamp: " + raw);
            }
            offset = (c == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
        }
        if (pos != raw.size())
            throw DataError("trailing garbage in timestamp: " + raw);
    }
    const std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo),
                                              static_cast<unsigned>(d));
    return days * seconds_per_day + h * 3600LL + mi * 60LL + s - offset;
}

// "YYYY-MM-DDThh:mm:ssZ"
inline std::string format_utc(Timestamp ts) {
    std::int64_t days = ts / seconds_per_day;
    std::int64_t rem = ts % seconds_per_day;
    if (rem < 0) { rem += seconds_per_day; --days; }
    int y; unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y,
                  mo, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem % 3600) / 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

// Start of the UTC day / hour containing ts (floor, correct for negatives).
inline Timestamp floor_to_day(Timestamp ts) {
    std::int64_t q = ts / seconds_per_day;
    if (ts % seconds_per_day < 0) --q;
    return q * seconds_per_day;
}

inline Timestamp floor_to_hour(Timestamp ts) {
    std::int64_t q = ts / seconds_per_hour;
    if (ts % seconds_per_hour < 0) --q;
    return q * seconds_per_hour;
}

} // namespace timeutil
} // namespace retnet
