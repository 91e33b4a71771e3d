// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/registry/discovery.hpp"
#include "txnet/core/errors.hpp"

#include <deque>

namespace txnet::registry {

core::Payload
graph_to_json(const RegistryGraph& g)
{
    core::Payload doc = core::Payload::object();
    doc["registry_id"] = g.registry_id;
    auto peers = core::Payload::array();
    for (const auto& [id, locator] : g.peers)
    {
        core::Payload p = core::Payload::object();
        p["registry_id"] = id;
        p["locator"] = locator;
        peers.push_back(p);
    }
    doc["peers"] = peers;
    auto records = core::Payload::array();
    for (const auto& rec : g.records)
    {
        records.push_back(record_to_json(rec));
    }
    doc["records"] = records;
    return doc;
}

RegistryGraph
graph_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("registry_id"))
    {
        raise(Errc::MalformedDocument, "registry graph missing registry_id");
    }
    RegistryGraph g;
    g.registry_id = doc.at("registry_id").get<std::string>();
    if (doc.contains("peers"))
    {
        for (const auto& p : doc.at("peers"))
        {
            g.peers.emplace_back(p.at("registry_id").get<std::string>(),
                                 p.at("locator").get<std::string>());
        }
    }
    if (doc.contains("records"))
    {
        for (const auto& r : doc.at("records"))
        {
            g.records.push_back(record_from_json(r));
        }
    }
    return g;
}

NetworkResolution
resolve_networks(const std::string& root_locator,
                 const DiscoveryCriteria& criteria, const GraphFetcher& fetch)
{
    auto root = fetch(root_locator);
    if (!root)
    {
        raise(Errc::RootUnreachable,
              "root registry at '" + root_locator + "' cannot be fetched");
    }

    NetworkResolution out;
    std::set<std::string> visitedIds;
    std::set<std::string> queuedLocators;
    std::deque<std::pair<std::string, std::optional<RegistryGraph>>> queue;
    queue.emplace_back(root_locator, std::move(root));
    queuedLocators.insert(root_locator);

    LookupFilter filter;
    filter.domain = criteria.domain;
    filter.region = criteria.region;

    while (!queue.empty())
    {
        auto [locator, graph] = std::move(queue.front());
        queue.pop_front();
        if (!graph)
        {
            out.unreachable.push_back(locator);
            continue;
        }
        if (!visitedIds.insert(graph->registry_id).second)
        {
            continue; // cycle or duplicate link
        }
        out.visited_order.push_back(graph->registry_id);

        NetworkMatch match;
        match.registry_id = graph->registry_id;
        std::set<std::string> seen;
        for (const auto& rec : graph->records)
        {
            if (rec.status != SubscriberStatus::ACTIVE)
            {
                continue;
            }
            if (!matches_filter(rec, filter))
            {
                continue;
            }
            if (seen.insert(rec.subscriber_id).second)
            {
                match.records.push_back(rec);
            }
        }
        if (!match.records.empty())
        {
            out.matches.push_back(std::move(match));
        }

        for (const auto& [peerId, peerLocator] : graph->peers)
        {
            if (visitedIds.count(peerId) || !queuedLocators.insert(peerLocator).second)
            {
                continue;
            }
            queue.emplace_back(peerLocator, fetch(peerLocator));
        }
    }
    return out;
}

std::pair<std::string, std::string>
TrustTable::norm(const std::string& a, const std::string& b)
{
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void
TrustTable::assertTrust(const std::string& a, const std::string& b)
{
    mPairs.insert(norm(a, b));
}

void
TrustTable::revokeTrust(const std::string& a, const std::string& b)
{
    mPairs.erase(norm(a, b));
}

bool
TrustTable::trusted(const std::string& a, const std::string& b) const
{
    if (a == b)
    {
        return true; // same network needs no cross-network assertion
    }
    return mPairs.count(norm(a, b)) != 0;
}

} // namespace txnet::registry
