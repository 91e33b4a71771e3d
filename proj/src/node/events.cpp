// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/node/events.hpp"

namespace txnet::node {

core::Payload
event_to_json(const EventRecord& rec)
{
    core::Payload doc = core::Payload::object();
    doc["timestamp"] = core::to_rfc3339(rec.at);
    doc["node"] = rec.node;
    doc["direction"] = rec.direction;
    doc["action"] = rec.action;
    doc["transaction_id"] = rec.transaction_id;
    doc["verdict"] = rec.verdict;
    return doc;
}

EventRecord
event_from_json(const core::Payload& doc)
{
    EventRecord rec;
    rec.at = core::from_rfc3339(doc.at("timestamp").get<std::string>());
    rec.node = doc.at("node").get<std::string>();
    rec.direction = doc.at("direction").get<std::string>();
    rec.action = doc.at("action").get<std::string>();
    rec.transaction_id = doc.at("transaction_id").get<std::string>();
    rec.verdict = doc.at("verdict").get<std::string>();
    return rec;
}

void
EventLog::append(EventRecord rec)
{
    std::lock_guard lock(mMutex);
    mRecords.push_back(std::move(rec));
}

std::vector<EventRecord>
EventLog::records() const
{
    std::lock_guard lock(mMutex);
    return mRecords;
}

std::string
EventLog::render() const
{
    std::lock_guard lock(mMutex);
    std::string out;
    for (const auto& rec : mRecords)
    {
        out += event_to_json(rec).dump();
        out += '\n';
    }
    return out;
}

size_t
EventLog::size() const
{
    std::lock_guard lock(mMutex);
    return mRecords.size();
}

} // namespace txnet::node
