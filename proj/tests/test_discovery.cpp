// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/errors.hpp"
#include "txnet/registry/discovery.hpp"
#include "txnet/sign/keys.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <map>
#include <queue>

using namespace txnet;
using namespace txnet::registry;

namespace {

SubscriberRecord
bpp(const std::string& id, const std::string& domain)
{
    auto kp = sign::generate_keypair(sign::kAlgTestDeterministic,
                                     std::hash<std::string>{}(id));
    SubscriberRecord rec;
    rec.subscriber_id = id;
    rec.role = Role::BPP;
    rec.domains = {domain};
    rec.endpoint = "mem://" + id;
    rec.key_id = kp.key_id;
    rec.key_algorithm = kp.algorithm;
    rec.verification_key = kp.verification_key;
    rec.region = "IN";
    return rec;
}

std::string
loc(const std::string& id)
{
    return "mem://" + id;
}

GraphFetcher
fetcher_for(const std::map<std::string, RegistryGraph>& graphs,
            std::set<std::string> down = {})
{
    return [graphs, down](const std::string& locator)
               -> std::optional<RegistryGraph> {
        for (const auto& [id, g] : graphs)
        {
            if (loc(id) == locator && !down.count(id))
            {
                return g;
            }
        }
        return std::nullopt;
    };
}

} // namespace

TEST_SUITE_BEGIN("registry-discovery");

TEST_CASE("a three-registry cycle terminates and yields all matches")
{
    std::map<std::string, RegistryGraph> graphs;
    graphs["r1"] = {"r1", {{"r2", loc("r2")}}, {bpp("p1", "mobility")}};
    graphs["r2"] = {"r2", {{"r3", loc("r3")}}, {bpp("p2", "mobility")}};
    graphs["r3"] = {"r3", {{"r1", loc("r1")}}, {bpp("p3", "mobility")}};

    auto res = resolve_networks(loc("r1"), {.domain = "mobility"},
                                fetcher_for(graphs));
    CHECK(res.matches.size() == 3);
    CHECK(res.unreachable.empty());
    CHECK(res.visited_order.size() == 3); // each registry visited exactly once
}

TEST_CASE("a lone root with no matches resolves to nothing")
{
    std::map<std::string, RegistryGraph> graphs;
    graphs["root"] = {"root", {}, {}};
    auto res =
        resolve_networks(loc("root"), {.domain = "energy"}, fetcher_for(graphs));
    CHECK(res.matches.empty());
    CHECK(res.unreachable.empty());
}

TEST_CASE("an unreachable root is an error; an unreachable peer is not")
{
    std::map<std::string, RegistryGraph> graphs;
    graphs["root"] = {"root",
                      {{"r1", loc("r1")}, {"r2", loc("r2")}},
                      {}};
    graphs["r1"] = {"r1", {}, {bpp("p1", "retail")}};
    graphs["r2"] = {"r2", {}, {bpp("p2", "retail")}};

    CHECK_THROWS_AS(resolve_networks(loc("missing"), {}, fetcher_for(graphs)),
                    Error);

    auto res = resolve_networks(loc("root"), {.domain = "retail"},
                                fetcher_for(graphs, {"r2"}));
    REQUIRE(res.matches.size() == 1);
    CHECK(res.matches[0].registry_id == "r1");
    REQUIRE(res.unreachable.size() == 1);
    CHECK(res.unreachable[0] == loc("r2"));
}

TEST_CASE("suspended records never surface through discovery")
{
    std::map<std::string, RegistryGraph> graphs;
    auto suspended = bpp("p-sus", "mobility");
    suspended.status = SubscriberStatus::SUSPENDED;
    graphs["r1"] = {"r1", {}, {bpp("p1", "mobility"), suspended}};
    auto res = resolve_networks(loc("r1"), {.domain = "mobility"},
                                fetcher_for(graphs));
    REQUIRE(res.matches.size() == 1);
    REQUIRE(res.matches[0].records.size() == 1);
    CHECK(res.matches[0].records[0].subscriber_id == "p1");
}

TEST_CASE("discovery equals BFS reachability on random graphs")
{
    testgen::Rand r(31337);
    for (int trial = 0; trial < 50; ++trial)
    {
        int n = r.range(1, 20);
        // Random digraph, cycles allowed (including self/duplicate edges).
        std::map<std::string, RegistryGraph> graphs;
        std::vector<std::vector<int>> edges(n);
        for (int i = 0; i < n; ++i)
        {
            int degree = r.range(0, 3);
            for (int d = 0; d < degree; ++d)
            {
                edges[i].push_back(r.range(0, n - 1));
            }
        }
        for (int i = 0; i < n; ++i)
        {
            std::string id = "r" + std::to_string(i);
            RegistryGraph g{id, {}, {}};
            for (int peer : edges[i])
            {
                std::string pid = "r" + std::to_string(peer);
                g.peers.emplace_back(pid, loc(pid));
            }
            if (r.chance(0.7))
            {
                g.records.push_back(
                    bpp("p" + std::to_string(i), "mobility"));
            }
            graphs[id] = g;
        }

        // Plain BFS oracle over the same edge lists.
        std::set<int> reachable;
        std::queue<int> q;
        q.push(0);
        reachable.insert(0);
        while (!q.empty())
        {
            int cur = q.front();
            q.pop();
            for (int nxt : edges[cur])
            {
                if (reachable.insert(nxt).second)
                {
                    q.push(nxt);
                }
            }
        }
        std::set<std::string> expected;
        for (int i : reachable)
        {
            if (!graphs["r" + std::to_string(i)].records.empty())
            {
                expected.insert("r" + std::to_string(i));
            }
        }

        auto res = resolve_networks(loc("r0"), {.domain = "mobility"},
                                    fetcher_for(graphs));
        std::set<std::string> got;
        for (const auto& m : res.matches)
        {
            got.insert(m.registry_id);
        }
        CHECK(got == expected);
        // Termination & at-most-once: visited ids are unique.
        std::set<std::string> visited(res.visited_order.begin(),
                                      res.visited_order.end());
        CHECK(visited.size() == res.visited_order.size());
        CHECK(visited.size() == reachable.size());
    }
}

TEST_CASE("trust assertions are symmetric and reflexive")
{
    TrustTable trust;
    CHECK(trust.trusted("reg-a", "reg-a"));
    CHECK_FALSE(trust.trusted("reg-a", "reg-b"));
    trust.assertTrust("reg-a", "reg-b");
    CHECK(trust.trusted("reg-a", "reg-b"));
    CHECK(trust.trusted("reg-b", "reg-a"));
    trust.revokeTrust("reg-b", "reg-a");
    CHECK_FALSE(trust.trusted("reg-a", "reg-b"));
}

TEST_SUITE_END();
