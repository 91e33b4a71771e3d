// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/time.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace txnet::node {

// One outstanding request awaiting its callback. Multi-shot entries
// (discovery) keep matching until their deadline; everything else is
// consumed by the first match.
struct PendingEntry
{
    std::string transaction_id;
    std::string message_id; // of the request
    std::string expected_callback;
    core::Timestamp deadline;
    int attempts = 0;
    bool multi_shot = false;
    int matches = 0;
};

// Correlation state for a node's outstanding requests. Entries leave the
// table exactly one way: matched (one-shot), or expired at their deadline.
class PendingTable
{
  public:
    void add(PendingEntry entry);

    // Correlates an incoming callback. One-shot entries are consumed;
    // multi-shot entries stay until expiry and count their matches.
    std::optional<PendingEntry> match(const std::string& transaction_id,
                                      const std::string& callback,
                                      core::Timestamp now);

    // Removes and returns entries whose deadline passed. Each entry can be
    // returned once, so timeout events fire exactly once.
    std::vector<PendingEntry> expireDue(core::Timestamp now);

    std::optional<core::Timestamp> nextDeadline() const;
    size_t size() const;

  private:
    mutable std::mutex mMutex;
    // (transaction_id, message_id) -> entry
    std::map<std::pair<std::string, std::string>, PendingEntry> mEntries;
};

} // namespace txnet::node
