// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/node/pending.hpp"

namespace txnet::node {

void
PendingTable::add(PendingEntry entry)
{
    std::lock_guard lock(mMutex);
    mEntries.emplace(std::make_pair(entry.transaction_id, entry.message_id),
                     std::move(entry));
}

std::optional<PendingEntry>
PendingTable::match(const std::string& transaction_id,
                    const std::string& callback, core::Timestamp now)
{
    std::lock_guard lock(mMutex);
    auto begin = mEntries.lower_bound({transaction_id, ""});
    for (auto it = begin; it != mEntries.end() &&
                          it->first.first == transaction_id;
         ++it)
    {
        PendingEntry& entry = it->second;
        if (entry.expected_callback != callback || now > entry.deadline)
        {
            continue;
        }
        entry.matches++;
        PendingEntry copy = entry;
        if (!entry.multi_shot)
        {
            mEntries.erase(it);
        }
        return copy;
    }
    return std::nullopt;
}

std::vector<PendingEntry>
PendingTable::expireDue(core::Timestamp now)
{
    std::lock_guard lock(mMutex);
    std::vector<PendingEntry> out;
    for (auto it = mEntries.begin(); it != mEntries.end();)
    {
        if (now > it->second.deadline)
        {
            out.push_back(it->second);
            it = mEntries.erase(it);
        }
        else
        {
            ++it;
        }
    }
    return out;
}

std::optional<core::Timestamp>
PendingTable::nextDeadline() const
{
    std::lock_guard lock(mMutex);
    std::optional<core::Timestamp> best;
    for (const auto& [key, entry] : mEntries)
    {
        if (!best || entry.deadline < *best)
        {
            best = entry.deadline;
        }
    }
    return best;
}

size_t
PendingTable::size() const
{
    std::lock_guard lock(mMutex);
    return mEntries.size();
}

} // namespace txnet::node
