// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/actions.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::core {

const char*
phase_name(Phase p)
{
    switch (p)
    {
    case Phase::Discovery:
        return "discovery";
    case Phase::Negotiation:
        return "negotiation";
    case Phase::Order:
        return "order";
    case Phase::Fulfillment:
        return "fulfillment";
    case Phase::PostFulfillment:
        return "post-fulfillment";
    }
    return "?";
}

namespace {

bool
is_callback_name(const std::string& name)
{
    return name.rfind("on_", 0) == 0;
}

} // namespace

const ActionRegistry&
ActionRegistry::core()
{
    static const ActionRegistry kRegistry = [] {
        struct Row
        {
            const char* action;
            Phase phase;
        };
        // The ten interactions every transaction decomposes into:
        // intent/catalog discovery, price negotiation, terms negotiation,
        // order confirmation, order modification, cancellation, status
        // updates, tracking, rating, and customer support.
        static const Row kCore[] = {
            {"search", Phase::Discovery},
            {"select", Phase::Negotiation},
            {"init", Phase::Negotiation},
            {"confirm", Phase::Order},
            {"update", Phase::Fulfillment},
            {"cancel", Phase::Order},
            {"status", Phase::Fulfillment},
            {"track", Phase::Fulfillment},
            {"rating", Phase::PostFulfillment},
            {"support", Phase::PostFulfillment},
        };
        ActionRegistry reg;
        for (const auto& row : kCore)
        {
            ActionInfo info;
            info.callback = std::string("on_") + row.action;
            info.phase = row.phase;
            info.core = true;
            reg.mEntries.emplace(row.action, std::move(info));
        }
        return reg;
    }();
    return kRegistry;
}

ActionRegistry
ActionRegistry::withExtension(const std::string& action, Phase phase) const
{
    if (is_callback_name(action))
    {
        raise(Errc::AlreadyACallback, "cannot register callback name '" + action +
                                          "' as a request action");
    }
    if (action.empty())
    {
        raise(Errc::UnknownAction, "empty action name");
    }
    if (mEntries.count(action))
    {
        raise(Errc::DuplicateAction, "action '" + action + "' already registered");
    }
    ActionRegistry out = *this;
    ActionInfo info;
    info.callback = "on_" + action;
    info.phase = phase;
    info.core = false;
    out.mEntries.emplace(action, std::move(info));
    return out;
}

bool
ActionRegistry::isRequestAction(const std::string& action) const
{
    return mEntries.count(action) != 0;
}

bool
ActionRegistry::isCallback(const std::string& name) const
{
    if (!is_callback_name(name))
    {
        return false;
    }
    return isRequestAction(name.substr(3));
}

std::string
ActionRegistry::pairCallback(const std::string& action) const
{
    if (is_callback_name(action))
    {
        raise(Errc::AlreadyACallback, "'" + action + "' is already a callback");
    }
    auto it = mEntries.find(action);
    if (it == mEntries.end())
    {
        raise(Errc::UnknownAction, "action '" + action + "' is not registered");
    }
    return it->second.callback;
}

std::string
ActionRegistry::requestForCallback(const std::string& callback) const
{
    if (is_callback_name(callback))
    {
        std::string action = callback.substr(3);
        if (isRequestAction(action))
        {
            return action;
        }
    }
    raise(Errc::UnknownAction, "'" + callback + "' is not a registered callback");
}

const ActionInfo&
ActionRegistry::info(const std::string& action) const
{
    auto it = mEntries.find(action);
    if (it == mEntries.end())
    {
        raise(Errc::UnknownAction, "action '" + action + "' is not registered");
    }
    return it->second;
}

bool
ActionRegistry::isRegistered(const std::string& name) const
{
    return isRequestAction(name) || isCallback(name);
}

std::vector<std::string>
ActionRegistry::coreActions() const
{
    std::vector<std::string> out;
    for (const auto& [name, info] : mEntries)
    {
        if (info.core)
        {
            out.push_back(name);
        }
    }
    return out;
}

} // namespace txnet::core
