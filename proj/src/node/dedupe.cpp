// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/node/dedupe.hpp"

namespace txnet::node {

void
DedupeStore::purge(core::Timestamp now)
{
    for (auto it = mEntries.begin(); it != mEntries.end();)
    {
        if (now - it->second.seen_at > mWindow)
        {
            it = mEntries.erase(it);
        }
        else
        {
            ++it;
        }
    }
}

DedupeStore::Verdict
DedupeStore::check(const std::string& transaction_id,
                   const std::string& message_id, const std::string& action,
                   core::Timestamp now)
{
    std::lock_guard lock(mMutex);
    purge(now);
    Key key{transaction_id, message_id, action};
    auto it = mEntries.find(key);
    if (it != mEntries.end())
    {
        return Verdict::Duplicate;
    }
    mEntries.emplace(key, Entry{now, Ack::ok()});
    return Verdict::Fresh;
}

void
DedupeStore::cacheAck(const std::string& transaction_id,
                      const std::string& message_id, const std::string& action,
                      Ack ack)
{
    std::lock_guard lock(mMutex);
    auto it = mEntries.find(Key{transaction_id, message_id, action});
    if (it != mEntries.end())
    {
        it->second.ack = std::move(ack);
    }
}

std::optional<Ack>
DedupeStore::cached(const std::string& transaction_id,
                    const std::string& message_id,
                    const std::string& action) const
{
    std::lock_guard lock(mMutex);
    auto it = mEntries.find(Key{transaction_id, message_id, action});
    if (it == mEntries.end())
    {
        return std::nullopt;
    }
    return it->second.ack;
}

size_t
DedupeStore::size() const
{
    std::lock_guard lock(mMutex);
    return mEntries.size();
}

} // namespace txnet::node
