// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/time.hpp"
#include "txnet/node/transport.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <queue>
#include <vector>

namespace txnet::sim {

// Discrete-event scheduler over virtual time. Events run in strict
// (time, sequence) order, so equal seeds give identical executions. The
// concurrent mode relaxes only intra-instant ordering: events sharing a
// virtual timestamp run on a worker pool.
class Scheduler : public node::TimerService
{
  public:
    explicit Scheduler(core::Timestamp start = core::Timestamp{0})
        : mNow(start)
    {
    }

    core::Timestamp now() override;
    void scheduleAfter(core::Millis delay, std::function<void()> fn) override;
    void scheduleAt(core::Timestamp at, std::function<void()> fn);

    // Drains the queue (or stops once the next event is past `until`).
    // Returns the number of events executed.
    size_t run(std::optional<core::Timestamp> until = std::nullopt);
    size_t runConcurrent(int workers,
                         std::optional<core::Timestamp> until = std::nullopt);

    bool empty() const;

  private:
    struct Event
    {
        core::Timestamp at;
        std::uint64_t seq;
        std::function<void()> fn;
    };
    struct Later
    {
        bool operator()(const Event& a, const Event& b) const
        {
            if (a.at != b.at)
            {
                return a.at > b.at;
            }
            return a.seq > b.seq;
        }
    };

    mutable std::mutex mMutex;
    core::Timestamp mNow;
    std::uint64_t mSeq = 0;
    std::priority_queue<Event, std::vector<Event>, Later> mQueue;
};

} // namespace txnet::sim
