// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/lifecycle.hpp"
#include "txnet/core/errors.hpp"

#include <doctest.h>

using namespace txnet;
using namespace txnet::core;

namespace {

OrderEvent
ev(const std::string& action, bool complete = false)
{
    OrderEvent e;
    e.action = action;
    e.fulfillment_complete = complete;
    e.at = Timestamp{1000};
    return e;
}

} // namespace

TEST_SUITE_BEGIN("core-lifecycle");

TEST_CASE("search moves a fresh lifecycle to DISCOVERING")
{
    auto lc = OrderLifecycle::start("txn-1");
    auto next = order_transition(lc, ev("search"));
    CHECK(next.state == LifecycleState::DISCOVERING);
    CHECK(next.history.size() == 1);
    CHECK(next.history[0].action == "search");
}

TEST_CASE("the canonical happy path ends COMPLETED")
{
    // Expected state sequence, worked out from the transition table by hand:
    // search->DISCOVERING, on_search->OFFERS_RECEIVED, select->SELECTING,
    // on_select->QUOTED, init->INITIALIZING, on_init->TERMS_OFFERED,
    // confirm->CONFIRMING, on_confirm->ACTIVE, status->ACTIVE,
    // on_status(complete)->COMPLETED.
    const LifecycleState expected[] = {
        LifecycleState::DISCOVERING,   LifecycleState::OFFERS_RECEIVED,
        LifecycleState::SELECTING,     LifecycleState::QUOTED,
        LifecycleState::INITIALIZING,  LifecycleState::TERMS_OFFERED,
        LifecycleState::CONFIRMING,    LifecycleState::ACTIVE,
        LifecycleState::ACTIVE,        LifecycleState::COMPLETED,
    };
    auto lc = OrderLifecycle::start("txn-1");
    auto path = canonical_happy_path(Timestamp{0});
    REQUIRE(path.size() == 10);
    for (size_t i = 0; i < path.size(); ++i)
    {
        lc = order_transition(lc, path[i]);
        CHECK(lc.state == expected[i]);
    }
    CHECK(lc.history.size() == 10);
}

TEST_CASE("COMPLETED and CANCELLED are terminal for order changes")
{
    auto lc = OrderLifecycle::start("txn-1");
    for (const auto& e : canonical_happy_path(Timestamp{0}))
    {
        lc = order_transition(lc, e);
    }
    REQUIRE(lc.state == LifecycleState::COMPLETED);

    CHECK_THROWS_AS(order_transition(lc, ev("confirm")), Error);
    CHECK_THROWS_AS(order_transition(lc, ev("select")), Error);
    CHECK_THROWS_AS(order_transition(lc, ev("cancel")), Error);

    // Post-fulfillment tracks stay open.
    for (const char* a : {"rating", "on_rating", "support", "on_support",
                          "status", "on_status", "track", "on_track"})
    {
        auto next = order_transition(lc, ev(a));
        CHECK(next.state == LifecycleState::COMPLETED);
    }
}

TEST_CASE("cancellation path")
{
    auto lc = OrderLifecycle::start("txn-1");
    for (const char* a : {"search", "on_search", "select", "on_select"})
    {
        lc = order_transition(lc, ev(a));
    }
    REQUIRE(lc.state == LifecycleState::QUOTED);
    lc = order_transition(lc, ev("cancel"));
    CHECK(lc.state == LifecycleState::CANCELLING);
    lc = order_transition(lc, ev("on_cancel"));
    CHECK(lc.state == LifecycleState::CANCELLED);
    // Nothing at all is accepted in CANCELLED.
    for (const auto& e : all_events(ActionRegistry::core()))
    {
        CHECK_THROWS_AS(order_transition(lc, e), Error);
    }
}

TEST_CASE("illegal events reject without mutation")
{
    auto lc = OrderLifecycle::start("txn-1");
    auto before = lc;
    CHECK_THROWS_AS(order_transition(lc, ev("confirm")), Error);
    try
    {
        order_transition(lc, ev("confirm"));
    }
    catch (const Error& e)
    {
        CHECK(e.code() == Errc::IllegalTransition);
    }
    CHECK(lc == before);

    CHECK_THROWS_AS(order_transition(lc, ev("teleport")), Error);
}

TEST_CASE("FSM safety: everything outside the table is rejected, unchanged")
{
    const auto& reg = ActionRegistry::core();
    auto events = all_events(reg);
    for (int si = 0; si <= static_cast<int>(LifecycleState::COMPLETED); ++si)
    {
        auto state = static_cast<LifecycleState>(si);
        OrderLifecycle lc;
        lc.transaction_id = "txn-x";
        lc.state = state;
        for (const auto& e : events)
        {
            auto target = transition_target(state, e, reg);
            if (target)
            {
                auto next = order_transition(lc, e, reg);
                CHECK(next.state == *target);
                CHECK(next.history.size() == lc.history.size() + 1);
            }
            else
            {
                auto before = lc;
                CHECK_THROWS_AS(order_transition(lc, e, reg), Error);
                CHECK(lc == before);
            }
        }
    }
}

TEST_CASE("FSM liveness: every non-terminal state has an outgoing transition")
{
    const auto& reg = ActionRegistry::core();
    auto events = all_events(reg);
    for (int si = 0; si <= static_cast<int>(LifecycleState::COMPLETED); ++si)
    {
        auto state = static_cast<LifecycleState>(si);
        if (state == LifecycleState::CANCELLED)
        {
            continue; // fully terminal by design
        }
        bool hasOutgoing = false;
        for (const auto& e : events)
        {
            if (transition_target(state, e, reg))
            {
                hasOutgoing = true;
                break;
            }
        }
        CHECK_MESSAGE(hasOutgoing, "state " << state_name(state));
    }
}

TEST_CASE("multiple offers: on_search loops in OFFERS_RECEIVED")
{
    auto lc = OrderLifecycle::start("txn-1");
    lc = order_transition(lc, ev("search"));
    lc = order_transition(lc, ev("on_search"));
    lc = order_transition(lc, ev("on_search"));
    lc = order_transition(lc, ev("on_search"));
    CHECK(lc.state == LifecycleState::OFFERS_RECEIVED);
    CHECK(lc.history.size() == 4);
}

TEST_CASE("on_init carries a form link into the lifecycle")
{
    auto lc = OrderLifecycle::start("txn-1");
    for (const char* a : {"search", "on_search", "select", "on_select", "init"})
    {
        lc = order_transition(lc, ev(a));
    }
    OrderEvent onInit = ev("on_init");
    onInit.form_link = "https://forms.example/consent/123";
    lc = order_transition(lc, onInit);
    CHECK(lc.state == LifecycleState::TERMS_OFFERED);
    CHECK(lc.form_link == "https://forms.example/consent/123");
}

TEST_CASE("history stays strictly ordered under equal timestamps")
{
    auto lc = OrderLifecycle::start("txn-1");
    OrderEvent a = ev("search");
    OrderEvent b = ev("on_search");
    b.at = a.at; // same virtual millisecond
    lc = order_transition(lc, a);
    lc = order_transition(lc, b);
    CHECK(lc.history[0].at <= lc.history[1].at);
    CHECK(lc.history[0].seq < lc.history[1].seq);
}

TEST_CASE("extension actions are phase-mapped into the lifecycle")
{
    auto reg = ActionRegistry::core().withExtension("issue",
                                                    Phase::PostFulfillment);
    auto lc = OrderLifecycle::start("txn-1");
    for (const auto& e : canonical_happy_path(Timestamp{0}))
    {
        lc = order_transition(lc, e, reg);
    }
    REQUIRE(lc.state == LifecycleState::COMPLETED);
    lc = order_transition(lc, ev("issue"), reg);
    CHECK(lc.state == LifecycleState::COMPLETED);
    lc = order_transition(lc, ev("on_issue"), reg);
    CHECK(lc.state == LifecycleState::COMPLETED);
    // ...but not during discovery.
    auto fresh = OrderLifecycle::start("txn-2");
    CHECK_THROWS_AS(order_transition(fresh, ev("issue"), reg), Error);
}

TEST_SUITE_END();
