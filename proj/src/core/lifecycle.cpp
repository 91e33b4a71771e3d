// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/lifecycle.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::core {

const char*
state_name(LifecycleState s)
{
    switch (s)
    {
    case LifecycleState::START:
        return "START";
    case LifecycleState::DISCOVERING:
        return "DISCOVERING";
    case LifecycleState::OFFERS_RECEIVED:
        return "OFFERS_RECEIVED";
    case LifecycleState::SELECTING:
        return "SELECTING";
    case LifecycleState::QUOTED:
        return "QUOTED";
    case LifecycleState::INITIALIZING:
        return "INITIALIZING";
    case LifecycleState::TERMS_OFFERED:
        return "TERMS_OFFERED";
    case LifecycleState::CONFIRMING:
        return "CONFIRMING";
    case LifecycleState::ACTIVE:
        return "ACTIVE";
    case LifecycleState::CANCELLING:
        return "CANCELLING";
    case LifecycleState::CANCELLED:
        return "CANCELLED";
    case LifecycleState::COMPLETED:
        return "COMPLETED";
    }
    return "?";
}

LifecycleState
state_from_name(const std::string& name)
{
    for (int i = 0; i <= static_cast<int>(LifecycleState::COMPLETED); ++i)
    {
        auto s = static_cast<LifecycleState>(i);
        if (name == state_name(s))
        {
            return s;
        }
    }
    raise(Errc::MalformedDocument, "unknown lifecycle state '" + name + "'");
}

bool
is_terminal(LifecycleState s)
{
    return s == LifecycleState::CANCELLED || s == LifecycleState::COMPLETED;
}

OrderLifecycle
OrderLifecycle::start(const std::string& transaction_id)
{
    OrderLifecycle lc;
    lc.transaction_id = transaction_id;
    return lc;
}

std::optional<LifecycleState>
transition_target(LifecycleState state, const OrderEvent& event,
                  const ActionRegistry& reg)
{
    using S = LifecycleState;
    const std::string& a = event.action;

    if (!reg.isRegistered(a))
    {
        return std::nullopt;
    }

    switch (state)
    {
    case S::START:
        if (a == "search")
            return S::DISCOVERING;
        break;
    case S::DISCOVERING:
        if (a == "on_search")
            return S::OFFERS_RECEIVED;
        break;
    case S::OFFERS_RECEIVED:
        // Several providers answer one search; further offers keep arriving.
        if (a == "on_search")
            return S::OFFERS_RECEIVED;
        if (a == "select")
            return S::SELECTING;
        break;
    case S::SELECTING:
        if (a == "on_select")
            return S::QUOTED;
        break;
    case S::QUOTED:
        if (a == "init")
            return S::INITIALIZING;
        if (a == "cancel")
            return S::CANCELLING;
        break;
    case S::INITIALIZING:
        if (a == "on_init")
            return S::TERMS_OFFERED;
        break;
    case S::TERMS_OFFERED:
        if (a == "confirm")
            return S::CONFIRMING;
        if (a == "cancel")
            return S::CANCELLING;
        break;
    case S::CONFIRMING:
        if (a == "on_confirm")
            return S::ACTIVE;
        break;
    case S::ACTIVE:
        if (a == "on_status" && event.fulfillment_complete)
            return S::COMPLETED;
        if (a == "update" || a == "on_update" || a == "status" ||
            a == "on_status" || a == "track" || a == "on_track")
            return S::ACTIVE;
        if (a == "cancel")
            return S::CANCELLING;
        // Fulfillment-phase extension actions ride along with the order.
        if (!reg.isCallback(a) && !reg.info(a).core &&
            reg.info(a).phase == Phase::Fulfillment)
            return S::ACTIVE;
        if (reg.isCallback(a))
        {
            const auto& info = reg.info(reg.requestForCallback(a));
            if (!info.core && info.phase == Phase::Fulfillment)
                return S::ACTIVE;
        }
        break;
    case S::CANCELLING:
        if (a == "on_cancel")
            return S::CANCELLED;
        break;
    case S::CANCELLED:
        break;
    case S::COMPLETED:
        if (a == "rating" || a == "on_rating" || a == "support" ||
            a == "on_support" || a == "status" || a == "on_status" ||
            a == "track" || a == "on_track")
            return S::COMPLETED;
        // Post-fulfillment extensions (e.g. issue/grievance) live here too.
        if (!reg.isCallback(a) && !reg.info(a).core &&
            reg.info(a).phase == Phase::PostFulfillment)
            return S::COMPLETED;
        if (reg.isCallback(a))
        {
            const auto& info = reg.info(reg.requestForCallback(a));
            if (!info.core && info.phase == Phase::PostFulfillment)
                return S::COMPLETED;
        }
        break;
    }
    return std::nullopt;
}

OrderLifecycle
order_transition(const OrderLifecycle& lc, const OrderEvent& event,
                 const ActionRegistry& reg)
{
    if (!reg.isRegistered(event.action))
    {
        raise(Errc::UnknownAction,
              "event '" + event.action + "' is not registered");
    }
    auto next = transition_target(lc.state, event, reg);
    if (!next)
    {
        raise(Errc::IllegalTransition, std::string("event '") + event.action +
                                           "' is illegal in state " +
                                           state_name(lc.state));
    }
    OrderLifecycle out = lc;
    out.state = *next;
    HistoryEntry entry;
    entry.action = event.action;
    entry.message_id = event.message_id;
    // Two deliveries can share a virtual-time millisecond; order is kept
    // strict via (timestamp, seq) with non-decreasing timestamps.
    entry.at = event.at;
    if (!out.history.empty() && entry.at < out.history.back().at)
    {
        entry.at = out.history.back().at;
    }
    entry.seq = out.history.empty() ? 1 : out.history.back().seq + 1;
    out.history.push_back(entry);
    if (event.form_link)
    {
        out.form_link = event.form_link;
    }
    return out;
}

std::vector<OrderEvent>
canonical_happy_path(Timestamp start)
{
    std::vector<OrderEvent> out;
    const char* seq[] = {"search", "on_search", "select", "on_select",
                         "init",   "on_init",   "confirm", "on_confirm",
                         "status", "on_status"};
    Timestamp at = start;
    for (const char* a : seq)
    {
        OrderEvent ev;
        ev.action = a;
        ev.at = at;
        if (std::string(a) == "on_status")
        {
            ev.fulfillment_complete = true;
        }
        out.push_back(ev);
        at = at + 1000;
    }
    return out;
}

std::vector<OrderEvent>
all_events(const ActionRegistry& reg)
{
    std::vector<OrderEvent> out;
    for (const auto& [action, info] : reg.entries())
    {
        OrderEvent req;
        req.action = action;
        out.push_back(req);

        OrderEvent cb;
        cb.action = info.callback;
        out.push_back(cb);
        if (info.callback == "on_status")
        {
            OrderEvent done = cb;
            done.fulfillment_complete = true;
            out.push_back(done);
        }
    }
    return out;
}

} // namespace txnet::core
