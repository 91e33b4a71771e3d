// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace txnet::core {

// Milliseconds. Used for latencies, ttls, backoff and virtual-time arithmetic.
using Millis = std::int64_t;

// UTC instant with millisecond resolution. Both the wall clock and the
// simulator's virtual clock produce these; everything downstream is agnostic
// to which one it is talking to.
struct Timestamp
{
    std::int64_t ms = 0;

    auto operator<=>(const Timestamp&) const = default;

    Timestamp operator+(Millis d) const { return Timestamp{ms + d}; }
    Timestamp operator-(Millis d) const { return Timestamp{ms - d}; }
    Millis operator-(const Timestamp& o) const { return ms - o.ms; }
};

// Canonical rendering: "2026-08-09T12:34:56.789Z". Fixed width, always UTC,
// always three fractional digits so encodings are byte-stable.
std::string to_rfc3339(Timestamp t);

// Strict parse of the canonical rendering (the fractional part may be
// omitted). Throws Error{MalformedDocument} on anything else.
Timestamp from_rfc3339(const std::string& text);

// Wall clock, used only outside the simulator.
Timestamp system_now();

} // namespace txnet::core
