// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/adapt/adaptation.hpp"
#include "txnet/gateway/policy.hpp"
#include "txnet/node/node.hpp"
#include "txnet/sim/telemetry.hpp"
#include "txnet/sim/transport.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace txnet::sim {

struct NodeSpec
{
    std::string subscriber_id;
    registry::Role role = registry::Role::BAP;
    std::set<std::string> domains;
    std::string locator;
    std::string region = "IN";
    std::optional<std::uint64_t> key_seed; // default derives from scenario seed
    // Behavior profile: "reference" answers honestly; "scraper" acks
    // searches but lists nothing.
    std::string profile = "reference";
    int status_completes_after = 1;
    node::RetryPolicy retry;
};

struct GatewaySpec
{
    std::string subscriber_id;
    std::string locator;
    std::uint64_t fairness_seed = 0;
    std::vector<std::string> policy_files; // relative to the data dir
    std::optional<std::uint64_t> key_seed;
};

struct NetworkSpec
{
    std::string registry_id;
    std::string registry_locator;
    std::optional<GatewaySpec> gateway;
    std::vector<NodeSpec> nodes;
};

struct FlowSpec
{
    std::string flow_id;
    std::string bap;
    std::string domain;
    int count = 1;
    core::Millis start_ms = 0;
    core::Millis interval_ms = 100;
    // "gateway" broadcasts via the home gateway; "direct:<bpp_id>" skips
    // gateways entirely; "multi-network" adds every remote network found
    // through the root registry.
    std::string discovery = "gateway";
    // "complete" runs to COMPLETED, "cancel" cancels after the quote,
    // "search-only" stops after discovery (the scraper-style profile).
    std::string conclude = "complete";
    core::Millis think_ms = 10;
    core::Millis status_poll_ms = 500;
};

struct GovernanceStep
{
    core::Millis at_ms = 0;
    AnomalyThresholds thresholds;
};

struct AssertionSpec
{
    std::string kind;
    core::Payload params;
};

struct Scenario
{
    std::string name;
    std::uint64_t seed = 0;
    TransportConfig transport;
    std::map<std::string, std::string> adaptation_files; // domain -> path
    std::vector<NetworkSpec> networks;
    std::string root_registry_id = "root";
    std::string root_locator = "mem://root";
    std::vector<std::pair<std::string, std::string>> trust;
    std::vector<FlowSpec> flows;
    std::vector<GovernanceStep> governance;
    std::vector<AssertionSpec> assertions;
};

// Parses a scenario document. File references stay relative; the runner
// resolves them against its data directory. Throws ScenarioConfigError.
Scenario scenario_from_json(const core::Payload& doc);
Scenario load_scenario_file(const std::string& path);

// Canonical bytes of one component's configuration inside a scenario
// document; the scaling property asserts these stay untouched when a
// network is added.
std::string component_config_bytes(const core::Payload& scenario_doc,
                                   const std::string& component_id);

} // namespace txnet::sim
