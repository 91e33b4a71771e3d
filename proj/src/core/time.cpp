// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/time.hpp"
#include "txnet/core/errors.hpp"

#include <chrono>
#include <cstdio>

namespace txnet::core {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t
days_from_civil(std::int64_t y, unsigned m, unsigned d)
{
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void
civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d)
{
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

bool
parse_fixed_uint(const char* s, int len, long& out)
{
    out = 0;
    for (int i = 0; i < len; ++i)
    {
        if (s[i] < '0' || s[i] > '9')
        {
            return false;
        }
        out = out * 10 + (s[i] - '0');
    }
    return true;
}

} // namespace

std::string
to_rfc3339(Timestamp t)
{
    std::int64_t ms = t.ms % 1000;
    std::int64_t secs = t.ms / 1000;
    if (ms < 0)
    {
        ms += 1000;
        secs -= 1;
    }
    std::int64_t days = secs / 86400;
    std::int64_t sod = secs % 86400;
    if (sod < 0)
    {
        sod += 86400;
        days -= 1;
    }
    std::int64_t y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  static_cast<long long>(y), mo, d,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60),
                  static_cast<long long>(sod % 60), static_cast<long long>(ms));
    return buf;
}

Timestamp
from_rfc3339(const std::string& text)
{
    // YYYY-MM-DDTHH:MM:SS[.mmm]Z
    const char* s = text.c_str();
    auto bad = [&]() -> Timestamp {
        raise(Errc::MalformedDocument, "bad RFC3339 timestamp: " + text);
    };
    if (text.size() != 20 && text.size() != 24)
    {
        return bad();
    }
    long y, mo, d, h, mi, se, ms = 0;
    if (!parse_fixed_uint(s, 4, y) || s[4] != '-' ||
        !parse_fixed_uint(s + 5, 2, mo) || s[7] != '-' ||
        !parse_fixed_uint(s + 8, 2, d) || s[10] != 'T' ||
        !parse_fixed_uint(s + 11, 2, h) || s[13] != ':' ||
        !parse_fixed_uint(s + 14, 2, mi) || s[16] != ':' ||
        !parse_fixed_uint(s + 17, 2, se))
    {
        return bad();
    }
    if (text.size() == 24)
    {
        if (s[19] != '.' || !parse_fixed_uint(s + 20, 3, ms) || s[23] != 'Z')
        {
            return bad();
        }
    }
    else if (s[19] != 'Z')
    {
        return bad();
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
    {
        return bad();
    }
    std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo),
                                        static_cast<unsigned>(d));
    std::int64_t secs = days * 86400 + h * 3600 + mi * 60 + se;
    return Timestamp{secs * 1000 + ms};
}

Timestamp
system_now()
{
    auto now = std::chrono::system_clock::now().time_since_epoch();
    return Timestamp{
        std::chrono::duration_cast<std::chrono::milliseconds>(now).count()};
}

} // namespace txnet::core
