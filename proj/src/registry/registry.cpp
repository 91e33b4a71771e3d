// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/registry/registry.hpp"
#include "txnet/core/errors.hpp"

#include <fstream>
#include <sstream>

namespace txnet::registry {

bool
matches_filter(const SubscriberRecord& rec, const LookupFilter& filter)
{
    if (filter.role && rec.role != *filter.role)
    {
        return false;
    }
    if (filter.domain && !rec.domains.count(*filter.domain))
    {
        return false;
    }
    if (filter.region && rec.region != *filter.region)
    {
        return false;
    }
    return true;
}

void
Registry::registerSubscriber(SubscriberRecord record)
{
    validate_record(record);
    std::lock_guard lock(mMutex);
    if (mIndex.count(record.subscriber_id))
    {
        raise(Errc::DuplicateSubscriber,
              "subscriber '" + record.subscriber_id + "' already registered");
    }
    record.status = SubscriberStatus::ACTIVE;
    mOrder.push_back(record.subscriber_id);
    mLog.push_back({MutationKind::Register, record});
    mIndex.emplace(record.subscriber_id, std::move(record));
}

void
Registry::setSubscriberStatus(const std::string& subscriber_id,
                              SubscriberStatus status)
{
    std::lock_guard lock(mMutex);
    auto it = mIndex.find(subscriber_id);
    if (it == mIndex.end())
    {
        raise(Errc::UnknownSubscriber,
              "subscriber '" + subscriber_id + "' is not registered");
    }
    it->second.status = status;
    mLog.push_back({MutationKind::SetStatus, it->second});
}

std::vector<SubscriberRecord>
Registry::lookup(const LookupFilter& filter) const
{
    std::lock_guard lock(mMutex);
    std::vector<SubscriberRecord> out;
    for (const auto& id : mOrder)
    {
        const auto& rec = mIndex.at(id);
        if (rec.status != SubscriberStatus::ACTIVE)
        {
            continue;
        }
        if (matches_filter(rec, filter))
        {
            out.push_back(rec);
        }
    }
    return out;
}

std::vector<SubscriberRecord>
Registry::snapshot() const
{
    std::lock_guard lock(mMutex);
    std::vector<SubscriberRecord> out;
    for (const auto& id : mOrder)
    {
        out.push_back(mIndex.at(id));
    }
    return out;
}

std::optional<SubscriberRecord>
Registry::find(const std::string& subscriber_id) const
{
    std::lock_guard lock(mMutex);
    auto it = mIndex.find(subscriber_id);
    if (it == mIndex.end())
    {
        return std::nullopt;
    }
    return it->second;
}

std::optional<sign::Bytes>
Registry::resolveKey(const std::string& subscriber_id,
                     const std::string& key_id) const
{
    std::lock_guard lock(mMutex);
    auto it = mIndex.find(subscriber_id);
    if (it == mIndex.end() || it->second.status != SubscriberStatus::ACTIVE ||
        it->second.key_id != key_id)
    {
        return std::nullopt;
    }
    return it->second.verification_key;
}

size_t
Registry::size() const
{
    std::lock_guard lock(mMutex);
    return mIndex.size();
}

std::vector<SubscriberRecord>
Registry::parseRecordLines(const std::string& text)
{
    std::vector<SubscriberRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            continue;
        }
        auto doc = core::Payload::parse(line, nullptr, false);
        if (doc.is_discarded())
        {
            raise(Errc::InvalidRecord, "registry line is not well-formed");
        }
        out.push_back(record_from_json(doc));
    }
    return out;
}

void
Registry::loadRecords(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        raise(Errc::IoError, "cannot read registry file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    for (auto& rec : parseRecordLines(buf.str()))
    {
        auto status = rec.status;
        registerSubscriber(rec);
        if (status == SubscriberStatus::SUSPENDED)
        {
            setSubscriberStatus(rec.subscriber_id, status);
        }
    }
}

void
Registry::dumpRecords(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        raise(Errc::IoError, "cannot write registry file " + path);
    }
    for (const auto& rec : snapshot())
    {
        out << record_to_json(rec).dump() << "\n";
    }
}

} // namespace txnet::registry
