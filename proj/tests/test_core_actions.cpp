// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/actions.hpp"
#include "txnet/core/context.hpp"
#include "txnet/core/errors.hpp"

#include <doctest.h>

#include <set>

using namespace txnet;
using namespace txnet::core;

TEST_SUITE_BEGIN("core-actions");

TEST_CASE("the core registry holds exactly ten request actions")
{
    const auto& reg = ActionRegistry::core();
    auto actions = reg.coreActions();
    CHECK(actions.size() == 10);

    std::set<std::string> expected = {"search", "select", "init",   "confirm",
                                      "update", "cancel", "status", "track",
                                      "rating", "support"};
    CHECK(std::set<std::string>(actions.begin(), actions.end()) == expected);
}

TEST_CASE("action/callback pairing is a bijection over the core set")
{
    const auto& reg = ActionRegistry::core();
    std::set<std::string> callbacks;
    for (const auto& action : reg.coreActions())
    {
        std::string cb = reg.pairCallback(action);
        CHECK(cb == "on_" + action);
        CHECK(reg.requestForCallback(cb) == action);
        callbacks.insert(cb);
    }
    // Injective: ten distinct callbacks.
    CHECK(callbacks.size() == 10);
}

TEST_CASE("pair_callback examples")
{
    const auto& reg = ActionRegistry::core();
    CHECK(reg.pairCallback("search") == "on_search");
    CHECK(reg.pairCallback("rating") == "on_rating");
    CHECK_THROWS_WITH_AS(reg.pairCallback("on_search"),
                         doctest::Contains("already a callback"), Error);
    CHECK_THROWS_AS(reg.pairCallback("teleport"), Error);
    try
    {
        reg.pairCallback("teleport");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == Errc::UnknownAction);
    }
}

TEST_CASE("extension actions never collide with core names")
{
    const auto& reg = ActionRegistry::core();
    auto extended = reg.withExtension("issue", Phase::PostFulfillment);
    CHECK(extended.isRequestAction("issue"));
    CHECK(extended.pairCallback("issue") == "on_issue");
    CHECK_FALSE(extended.info("issue").core);
    // Core set unchanged.
    CHECK(extended.coreActions().size() == 10);

    CHECK_THROWS_AS(extended.withExtension("issue", Phase::PostFulfillment),
                    Error);
    CHECK_THROWS_AS(reg.withExtension("search", Phase::Discovery), Error);
    CHECK_THROWS_AS(reg.withExtension("on_issue", Phase::PostFulfillment),
                    Error);
}

TEST_CASE("default ttl is 30s for discovery and 300s otherwise")
{
    const auto& reg = ActionRegistry::core();
    CHECK(default_ttl_seconds(reg, "search") == 30);
    CHECK(default_ttl_seconds(reg, "on_search") == 30);
    CHECK(default_ttl_seconds(reg, "confirm") == 300);
    CHECK(default_ttl_seconds(reg, "on_status") == 300);
}

TEST_SUITE_END();
