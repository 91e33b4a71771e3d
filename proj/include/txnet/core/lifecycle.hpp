// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/actions.hpp"
#include "txnet/core/time.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace txnet::core {

// Per-transaction state spanning discovery, negotiation, confirmation,
// fulfillment and post-fulfillment.
enum class LifecycleState
{
    START,
    DISCOVERING,
    OFFERS_RECEIVED,
    SELECTING,
    QUOTED,
    INITIALIZING,
    TERMS_OFFERED,
    CONFIRMING,
    ACTIVE,
    CANCELLING,
    CANCELLED,
    COMPLETED,
};

const char* state_name(LifecycleState s);
LifecycleState state_from_name(const std::string& name);

// True for states that accept no order-changing events. COMPLETED still
// accepts the rating/support/status/track tracks; CANCELLED accepts nothing.
bool is_terminal(LifecycleState s);

// One lifecycle event: a request action or callback, plus the payload facts
// the table branches on.
struct OrderEvent
{
    std::string action;
    std::string message_id;                    // empty for local events
    bool fulfillment_complete = false;         // on_status branch
    std::optional<std::string> form_link;      // on_init may carry one
    Timestamp at;
};

struct HistoryEntry
{
    std::string action;
    std::string message_id;
    Timestamp at;
    std::uint64_t seq = 0;

    bool operator==(const HistoryEntry&) const = default;
};

struct OrderLifecycle
{
    std::string transaction_id;
    LifecycleState state = LifecycleState::START;
    std::vector<HistoryEntry> history; // append-only, time-ordered
    std::optional<std::string> form_link;

    static OrderLifecycle start(const std::string& transaction_id);

    bool operator==(const OrderLifecycle&) const = default;
};

// Pure transition-table lookup; nullopt when (state, event) is illegal.
std::optional<LifecycleState> transition_target(LifecycleState state,
                                                const OrderEvent& event,
                                                const ActionRegistry& reg);

// Applies one event, returning the advanced lifecycle. Throws
// IllegalTransition (leaving `lc` untouched) for events outside the table
// and UnknownAction for unregistered ones.
OrderLifecycle order_transition(const OrderLifecycle& lc, const OrderEvent& event,
                                const ActionRegistry& reg = ActionRegistry::core());

// The canonical happy path: search ... on_status(complete), ending COMPLETED.
std::vector<OrderEvent> canonical_happy_path(Timestamp start);

// Every lifecycle event the table knows for `reg`, with both on_status
// variants. Used to enumerate the full (state x event) space in tests.
std::vector<OrderEvent> all_events(const ActionRegistry& reg);

} // namespace txnet::core
