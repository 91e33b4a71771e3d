// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/node/events.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace txnet::sim {

// Per-subscriber traffic counters over a time window, extracted from the
// structured event log. This is the input network operators watch to spot
// participants using the network for data harvesting instead of commerce.
struct TelemetryRecord
{
    std::string subscriber_id;
    std::map<std::string, int> action_counts; // accepted messages per action
    int search_count = 0;
    int confirmed_order_count = 0;
    core::Timestamp window_start;
    core::Timestamp window_end;
};

std::vector<TelemetryRecord>
aggregate_telemetry(const std::vector<node::EventRecord>& events,
                    core::Timestamp window_start, core::Timestamp window_end,
                    const std::optional<std::set<std::string>>& subjects =
                        std::nullopt);

struct AnomalyThresholds
{
    int min_search_volume = 100;
    double max_search_to_order_ratio = 50.0;
};

struct AnomalyFlag
{
    std::string subscriber_id;
    std::string flag; // SCRAPING_SUSPECTED
    std::string evidence;
};

// Threshold rule: flag s iff search_count >= min_search_volume and
// search_count / max(1, confirmed_order_count) > max_search_to_order_ratio.
std::vector<AnomalyFlag>
detect_anomalies(const std::vector<TelemetryRecord>& records,
                 const AnomalyThresholds& thresholds);

} // namespace txnet::sim
