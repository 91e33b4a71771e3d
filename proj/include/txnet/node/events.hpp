// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/payload.hpp"
#include "txnet/core/time.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace txnet::node {

// One structured telemetry line: who did what, when, with which verdict.
// Verdict vocabulary: ACK, NACK:<code>, MATCHED, ORPHAN, DUPLICATE, DROPPED,
// PARTITIONED, NO_ROUTE, FAILED, TIMEOUT, TRUST_DENIED, DELIVERED.
struct EventRecord
{
    core::Timestamp at;
    std::string node;
    std::string direction; // SEND | RECV | LOCAL
    std::string action;
    std::string transaction_id;
    std::string verdict;

    bool operator==(const EventRecord&) const = default;
};

core::Payload event_to_json(const EventRecord& rec);
EventRecord event_from_json(const core::Payload& doc);

// Append-only log shared by every component of one network (or scenario).
// The rendered form is one canonical line per event; it is both the golden
// replay artifact and the telemetry input.
class EventLog
{
  public:
    void append(EventRecord rec);

    std::vector<EventRecord> records() const;
    std::string render() const;
    size_t size() const;

  private:
    mutable std::mutex mMutex;
    std::vector<EventRecord> mRecords;
};

} // namespace txnet::node
