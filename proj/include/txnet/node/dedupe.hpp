// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/time.hpp"
#include "txnet/node/ack.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

namespace txnet::node {

// Delivery is at-least-once (retries fire whenever a receipt goes missing),
// so receivers keep a bounded memory of processed messages. A duplicate gets
// the cached receipt back and causes no second effect. The window is a
// documented bound: a repeat after expiry counts as fresh.
class DedupeStore
{
  public:
    explicit DedupeStore(core::Millis window_ms) : mWindow(window_ms) {}

    enum class Verdict
    {
        Fresh,
        Duplicate,
    };

    // Fresh records the triple (with a provisional receipt) and purges
    // entries older than the window.
    Verdict check(const std::string& transaction_id,
                  const std::string& message_id, const std::string& action,
                  core::Timestamp now);

    // Attaches the final receipt so retried deliveries see the same answer.
    void cacheAck(const std::string& transaction_id,
                  const std::string& message_id, const std::string& action,
                  Ack ack);

    std::optional<Ack> cached(const std::string& transaction_id,
                              const std::string& message_id,
                              const std::string& action) const;

    size_t size() const;

  private:
    using Key = std::tuple<std::string, std::string, std::string>;
    struct Entry
    {
        core::Timestamp seen_at;
        Ack ack = Ack::ok();
    };

    void purge(core::Timestamp now);

    mutable std::mutex mMutex;
    core::Millis mWindow;
    std::map<Key, Entry> mEntries;
};

} // namespace txnet::node
