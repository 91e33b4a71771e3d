// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/actions.hpp"
#include "txnet/core/ids.hpp"
#include "txnet/core/payload.hpp"
#include "txnet/core/time.hpp"

#include <optional>
#include <string>

namespace txnet::core {

inline constexpr const char* kCoreVersion = "1.1.0";

// Routing and correlation header carried with every message. The domain
// travels here so receivers can accept or reject before touching the payload.
struct Context
{
    std::string domain;
    std::string action;
    std::string core_version;
    std::string bap_id;
    std::string bap_uri;
    std::optional<std::string> bpp_id; // absent on broadcast search
    std::optional<std::string> bpp_uri;
    std::string transaction_id; // constant across one order lifecycle
    std::string message_id;     // unique per (transaction, direction)
    Timestamp timestamp;
    std::int64_t ttl_seconds = 0;

    bool operator==(const Context&) const = default;

    bool expired(Timestamp now) const
    {
        return now > timestamp + ttl_seconds * 1000;
    }
};

// Default ttl: 30 s for discovery-phase actions and their callbacks,
// 300 s for everything else. Fixed so expiry behaviour is reproducible.
std::int64_t default_ttl_seconds(const ActionRegistry& reg,
                                 const std::string& action);

// Builds a fresh request context. Throws UnknownAction when `action` is not
// a registered request action or callback, NonPositiveTtl when ttl <= 0.
Context make_context(const ActionRegistry& reg, const std::string& domain,
                     const std::string& action, const std::string& bap_id,
                     const std::string& bap_uri,
                     const std::string& transaction_id,
                     std::int64_t ttl_seconds, Timestamp now,
                     IdGenerator& ids);

// Derives the callback context a provider attaches to its reply: same
// transaction, fresh message id, bpp fields filled in.
Context make_callback_context(const ActionRegistry& reg, const Context& request,
                              const std::string& bpp_id,
                              const std::string& bpp_uri, Timestamp now,
                              IdGenerator& ids);

Payload context_to_json(const Context& ctx);
Context context_from_json(const Payload& doc);

} // namespace txnet::core
