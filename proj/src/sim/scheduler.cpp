// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sim/scheduler.hpp"

#include <thread>

namespace txnet::sim {

core::Timestamp
Scheduler::now()
{
    std::lock_guard lock(mMutex);
    return mNow;
}

void
Scheduler::scheduleAfter(core::Millis delay, std::function<void()> fn)
{
    std::lock_guard lock(mMutex);
    mQueue.push(Event{mNow + (delay < 0 ? 0 : delay), mSeq++, std::move(fn)});
}

void
Scheduler::scheduleAt(core::Timestamp at, std::function<void()> fn)
{
    std::lock_guard lock(mMutex);
    if (at < mNow)
    {
        at = mNow;
    }
    mQueue.push(Event{at, mSeq++, std::move(fn)});
}

size_t
Scheduler::run(std::optional<core::Timestamp> until)
{
    size_t executed = 0;
    for (;;)
    {
        Event ev;
        {
            std::lock_guard lock(mMutex);
            if (mQueue.empty())
            {
                break;
            }
            if (until && mQueue.top().at > *until)
            {
                mNow = *until;
                break;
            }
            ev = mQueue.top();
            mQueue.pop();
            mNow = ev.at;
        }
        ev.fn();
        ++executed;
    }
    return executed;
}

size_t
Scheduler::runConcurrent(int workers, std::optional<core::Timestamp> until)
{
    if (workers < 2)
    {
        return run(until);
    }
    size_t executed = 0;
    for (;;)
    {
        // Collect the batch of events sharing the next timestamp.
        std::vector<Event> batch;
        {
            std::lock_guard lock(mMutex);
            if (mQueue.empty())
            {
                break;
            }
            if (until && mQueue.top().at > *until)
            {
                mNow = *until;
                break;
            }
            core::Timestamp at = mQueue.top().at;
            mNow = at;
            while (!mQueue.empty() && mQueue.top().at == at)
            {
                batch.push_back(mQueue.top());
                mQueue.pop();
            }
        }
        if (batch.size() == 1)
        {
            batch[0].fn();
        }
        else
        {
            std::vector<std::thread> pool;
            std::atomic<size_t> next{0};
            int n = std::min<int>(workers, static_cast<int>(batch.size()));
            for (int w = 0; w < n; ++w)
            {
                pool.emplace_back([&] {
                    for (;;)
                    {
                        size_t i = next.fetch_add(1);
                        if (i >= batch.size())
                        {
                            return;
                        }
                        batch[i].fn();
                    }
                });
            }
            for (auto& t : pool)
            {
                t.join();
            }
        }
        executed += batch.size();
    }
    return executed;
}

bool
Scheduler::empty() const
{
    std::lock_guard lock(mMutex);
    return mQueue.empty();
}

} // namespace txnet::sim
