// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sim/telemetry.hpp"

namespace txnet::sim {

std::vector<TelemetryRecord>
aggregate_telemetry(const std::vector<node::EventRecord>& events,
                    core::Timestamp window_start, core::Timestamp window_end,
                    const std::optional<std::set<std::string>>& subjects)
{
    std::map<std::string, TelemetryRecord> byNode;
    for (const auto& ev : events)
    {
        if (ev.at < window_start || ev.at > window_end)
        {
            continue;
        }
        if (subjects && !subjects->count(ev.node))
        {
            continue;
        }
        auto& rec = byNode[ev.node];
        rec.subscriber_id = ev.node;

        // Accepted traffic only; drops, retries and duplicates do not count
        // twice.
        bool acceptedRecv = ev.direction == "RECV" &&
                            (ev.verdict == "ACK" || ev.verdict == "MATCHED");
        bool acceptedSend = ev.direction == "SEND" && ev.verdict == "ACK";
        if (!acceptedRecv && !acceptedSend)
        {
            continue;
        }
        rec.action_counts[ev.action]++;
        if (ev.action == "search")
        {
            rec.search_count++;
        }
        if ((ev.direction == "RECV" && ev.action == "confirm") ||
            (ev.direction == "RECV" && ev.action == "on_confirm"))
        {
            rec.confirmed_order_count++;
        }
    }
    std::vector<TelemetryRecord> out;
    for (auto& [id, rec] : byNode)
    {
        rec.window_start = window_start;
        rec.window_end = window_end;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<AnomalyFlag>
detect_anomalies(const std::vector<TelemetryRecord>& records,
                 const AnomalyThresholds& thresholds)
{
    std::vector<AnomalyFlag> out;
    for (const auto& rec : records)
    {
        if (rec.search_count < thresholds.min_search_volume)
        {
            continue;
        }
        double ratio = static_cast<double>(rec.search_count) /
                       static_cast<double>(std::max(1, rec.confirmed_order_count));
        if (ratio > thresholds.max_search_to_order_ratio)
        {
            AnomalyFlag flag;
            flag.subscriber_id = rec.subscriber_id;
            flag.flag = "SCRAPING_SUSPECTED";
            flag.evidence = "searches=" + std::to_string(rec.search_count) +
                            " confirmed_orders=" +
                            std::to_string(rec.confirmed_order_count);
            out.push_back(std::move(flag));
        }
    }
    return out;
}

} // namespace txnet::sim
