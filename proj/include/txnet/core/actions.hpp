// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

namespace txnet::core {

// Transaction phase an action belongs to.
enum class Phase
{
    Discovery,
    Negotiation,
    Order,
    Fulfillment,
    PostFulfillment,
};

const char* phase_name(Phase p);

struct ActionInfo
{
    std::string callback; // paired callback name, "on_<action>"
    Phase phase;
    bool core = false;
};

// The set of request actions a network speaks. The ten core interactions are
// always present; extension actions (e.g. an issue/grievance protocol) can be
// layered on without touching the core set.
class ActionRegistry
{
  public:
    // Registry holding exactly the ten core request actions.
    static const ActionRegistry& core();

    // Returns a copy with an extension action added. The callback name is
    // derived mechanically (on_<action>). Throws DuplicateAction when the
    // name collides with a core or already-registered action, and
    // AlreadyACallback when `action` itself is a callback name.
    ActionRegistry withExtension(const std::string& action, Phase phase) const;

    bool isRequestAction(const std::string& action) const;
    bool isCallback(const std::string& name) const;

    // pair_callback: "search" -> "on_search". Throws UnknownAction for
    // unregistered actions and AlreadyACallback when given a callback name.
    std::string pairCallback(const std::string& action) const;

    // Inverse pairing: "on_search" -> "search". Throws UnknownAction.
    std::string requestForCallback(const std::string& callback) const;

    const ActionInfo& info(const std::string& action) const;

    // True when `name` is either a registered request action or its callback.
    bool isRegistered(const std::string& name) const;

    const std::map<std::string, ActionInfo>& entries() const { return mEntries; }

    std::vector<std::string> coreActions() const;

  private:
    std::map<std::string, ActionInfo> mEntries;
};

} // namespace txnet::core
