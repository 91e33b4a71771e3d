// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/lifecycle.hpp"
#include "txnet/sim/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace txnet::sim {

struct FlowResult
{
    std::string instance_id;
    std::string flow_id;
    std::string transaction_id;
    std::string status; // COMPLETED | CANCELLED | ABORTED:<reason> | RUNNING
    std::optional<core::LifecycleState> lifecycle_state;
};

struct AssertionResult
{
    std::string kind;
    bool pass = false;
    std::string detail;
};

struct RecordedMessage
{
    std::string action;
    std::string domain;
    core::Payload payload;
};

struct ScenarioResult
{
    std::string log_text; // canonical event log, one line per event
    std::vector<node::EventRecord> events;
    std::vector<FlowResult> flows;
    std::vector<AssertionResult> assertions;
    std::vector<TelemetryRecord> telemetry;
    std::vector<RecordedMessage> corpus;
    size_t pending_remaining = 0;
    bool ok = false;

    size_t terminal_flows() const;
};

struct RunOptions
{
    std::string data_dir;   // base for adaptation/policy file references
    bool concurrent = false;
    int workers = 4;
    std::optional<std::uint64_t> seed_override;
};

// Builds the topology, drives every scripted flow over the simulated
// transport, applies governance steps, and evaluates the scenario's
// assertions. Deterministic under (seed, config) in sequential mode.
ScenarioResult run_scenario(const Scenario& s, const RunOptions& opts);

} // namespace txnet::sim
