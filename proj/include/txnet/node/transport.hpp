// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/time.hpp"
#include "txnet/node/ack.hpp"

#include <functional>
#include <string>

namespace txnet::node {

// Result of one delivery attempt. Acked means the receiver processed the
// bytes and its receipt made it back; everything else is indistinguishable
// from silence to the sender (the receiver may or may not have seen it).
struct SendOutcome
{
    enum class Kind
    {
        Acked,
        Dropped,
        Partitioned,
        NoRoute,
    };

    Kind kind = Kind::NoRoute;
    Ack ack;

    static SendOutcome acked(Ack a) { return {Kind::Acked, std::move(a)}; }
    static SendOutcome dropped() { return {Kind::Dropped, {}}; }
    static SendOutcome partitioned() { return {Kind::Partitioned, {}}; }
    static SendOutcome no_route() { return {Kind::NoRoute, {}}; }
};

// Server-to-server byte transport. Implementations: the in-process simulated
// transport (seeded faults, virtual latency) and the loopback HTTP transport.
class Transport
{
  public:
    virtual ~Transport() = default;

    virtual SendOutcome request(const std::string& from,
                                const std::string& to_locator,
                                const std::string& bytes) = 0;
};

// Deferred execution for retries and ttl expiry. The simulator implements
// this over virtual time; live deployments over a timer thread.
class TimerService
{
  public:
    virtual ~TimerService() = default;

    virtual core::Timestamp now() = 0;
    virtual void scheduleAfter(core::Millis delay, std::function<void()> fn) = 0;
};

} // namespace txnet::node
