// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/registry/registry.hpp"

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace txnet::registry {

// One registry's public face for discovery: its own records plus links to
// peer registries (a root registry is just a graph node whose value is its
// peer list). Peer links may form cycles.
struct RegistryGraph
{
    std::string registry_id;
    std::vector<std::pair<std::string, std::string>> peers; // (id, locator)
    std::vector<SubscriberRecord> records;
};

core::Payload graph_to_json(const RegistryGraph& g);
RegistryGraph graph_from_json(const core::Payload& doc);

struct DiscoveryCriteria
{
    std::optional<std::string> domain;
    std::optional<std::string> region;
};

// Locator -> graph. A nullopt result means that registry was unreachable.
using GraphFetcher =
    std::function<std::optional<RegistryGraph>(const std::string& locator)>;

struct NetworkMatch
{
    std::string registry_id;
    std::vector<SubscriberRecord> records;
};

struct NetworkResolution
{
    std::vector<NetworkMatch> matches;          // one entry per reached registry
    std::vector<std::string> unreachable;       // locators whose fetch failed
    std::vector<std::string> visited_order;     // registry ids, traversal order
};

// Breadth-first traversal from the root locator with a visited set, so
// cyclic peer links terminate. Per-registry fetch failures produce partial
// results; only an unreachable root is an error (RootUnreachable). Records
// are matched as ACTIVE + criteria and deduplicated per registry.
NetworkResolution resolve_networks(const std::string& root_locator,
                                   const DiscoveryCriteria& criteria,
                                   const GraphFetcher& fetch);

// Pairwise trust assertions between registries. Transactions across network
// borders require one; discovery does not. Assertions are symmetric.
class TrustTable
{
  public:
    void assertTrust(const std::string& a, const std::string& b);
    void revokeTrust(const std::string& a, const std::string& b);
    bool trusted(const std::string& a, const std::string& b) const;

  private:
    static std::pair<std::string, std::string> norm(const std::string& a,
                                                    const std::string& b);
    std::set<std::pair<std::string, std::string>> mPairs;
};

} // namespace txnet::registry
