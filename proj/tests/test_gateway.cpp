// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/errors.hpp"
#include "txnet/gateway/gateway.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <map>

using namespace txnet;
using namespace txnet::gateway;
using txnet::registry::Registry;
using txnet::registry::Role;
using txnet::registry::SubscriberRecord;
using txnet::registry::SubscriberStatus;

namespace {

struct Fixture
{
    Registry reg{"reg-a"};
    sign::KeyPair bapKey = sign::generate_keypair(sign::kAlgEd25519, 1);
    core::IdGenerator ids{42};
    core::Timestamp now{1'700'000'000'000};

    Fixture()
    {
        addSubscriber("bap-1", Role::BAP, {}, bapKey);
    }

    void addSubscriber(const std::string& id, Role role,
                       std::set<std::string> domains,
                       std::optional<sign::KeyPair> kp = std::nullopt)
    {
        auto key = kp.value_or(sign::generate_keypair(
            sign::kAlgTestDeterministic, std::hash<std::string>{}(id)));
        SubscriberRecord rec;
        rec.subscriber_id = id;
        rec.role = role;
        rec.domains = std::move(domains);
        rec.endpoint = "mem://" + id;
        rec.key_id = key.key_id;
        rec.key_algorithm = key.algorithm;
        rec.verification_key = key.verification_key;
        rec.region = "IN/KA";
        reg.registerSubscriber(rec);
    }

    sign::KeyResolver resolver() const
    {
        return [this](const std::string& sid,
                      const std::string& kid) -> std::optional<sign::Bytes> {
            return reg.resolveKey(sid, kid);
        };
    }

    core::Envelope searchEnvelope(const std::string& domain = "mobility",
                                  core::Payload intent = {})
    {
        core::Envelope e;
        e.context = core::make_context(core::ActionRegistry::core(), domain,
                                       "search", "bap-1", "mem://bap-1",
                                       ids.next(), 30, now, ids);
        if (intent.is_null())
        {
            e.message["intent"]["fulfillment"]["start"]["location"]["gps"] =
                "12.97,77.59";
            e.message["intent"]["fulfillment"]["end"]["location"]["gps"] =
                "12.29,76.63";
            e.message["intent"]["passengers"] = 1;
        }
        else
        {
            e.message["intent"] = intent;
        }
        return sign::signed_envelope(std::move(e), bapKey, "bap-1", 60'000, now);
    }

    Policy quarantine() const
    {
        return load_policy_file(std::string(TXNET_DATA_DIR) +
                                "/policies/mobility-quarantine.json");
    }
};

// Delivery hook that records what each target received.
struct CaptureDeliver
{
    std::map<std::string, std::string> delivered;
    std::set<std::string> unreachable;

    DeliverFn fn()
    {
        return [this](const SubscriberRecord& target, const std::string& bytes) {
            if (unreachable.count(target.subscriber_id))
            {
                return false;
            }
            delivered[target.subscriber_id] = bytes;
            return true;
        };
    }
};

} // namespace

TEST_SUITE_BEGIN("gateway");

TEST_CASE("quarantine policy: hospitals pass, restaurants do not")
{
    Fixture fx;
    auto policy = fx.quarantine();

    core::Payload blocked = core::Payload::object();
    blocked["fulfillment"]["end"]["location"]["zone"] = "Z-QUARANTINE-1";
    blocked["destination"]["category"] = "restaurant";
    auto denied = evaluate_policy(policy, fx.searchEnvelope("mobility", blocked));
    CHECK_FALSE(denied.allow);
    CHECK(denied.denied_by == "mobility-quarantine-zones");

    core::Payload hospital = blocked;
    hospital["destination"]["category"] = "hospital";
    CHECK(evaluate_policy(policy, fx.searchEnvelope("mobility", hospital)).allow);

    // Outside the quarantined zones the rule never matches.
    core::Payload elsewhere = blocked;
    elsewhere["fulfillment"]["end"]["location"]["zone"] = "Z-OPEN";
    CHECK(evaluate_policy(policy, fx.searchEnvelope("mobility", elsewhere)).allow);

    // Outside the policy's scope the verdict is vacuously ALLOW.
    auto retail = fx.searchEnvelope("retail", blocked);
    CHECK(evaluate_policy(policy, retail).allow);
}

TEST_CASE("malformed policies are rejected at load")
{
    CHECK_THROWS_AS(policy_from_json(core::Payload::parse(R"({"rules": []})")),
                    Error);
    CHECK_THROWS_AS(policy_from_json(core::Payload::parse(
                        R"({"policy_id":"p","rules":[{"match":{"path":"message.x","op":"sounds_like","value":"y"},"effect":"DENY"}]})")),
                    Error);
    CHECK_THROWS_AS(policy_from_json(core::Payload::parse(
                        R"({"policy_id":"p","rules":[{"match":{"path":"payload.x","op":"equals","value":"y"},"effect":"DENY"}]})")),
                    Error);
    CHECK_THROWS_AS(policy_from_json(core::Payload::parse(
                        R"({"policy_id":"p","rules":[{"match":{"path":"message.x","op":"equals","value":"y"},"effect":"MAYBE"}]})")),
                    Error);
}

TEST_CASE("first matching rule wins; later rules never fire")
{
    auto doc = core::Payload::parse(R"({
      "policy_id": "ordered",
      "rules": [
        {"match": {"path": "message.intent.kind", "op": "equals", "value": "a"},
         "effect": "ALLOW"},
        {"match": {"path": "message.intent.kind", "op": "in_set", "values": ["a", "b"]},
         "effect": "DENY"}
      ]})");
    auto policy = policy_from_json(doc);

    Fixture fx;
    core::Payload intentA = core::Payload::object();
    intentA["kind"] = "a";
    CHECK(evaluate_policy(policy, fx.searchEnvelope("mobility", intentA)).allow);
    core::Payload intentB = core::Payload::object();
    intentB["kind"] = "b";
    CHECK_FALSE(
        evaluate_policy(policy, fx.searchEnvelope("mobility", intentB)).allow);
}

TEST_CASE("region_within matches hierarchical region codes")
{
    auto doc = core::Payload::parse(R"({
      "policy_id": "regional",
      "rules": [
        {"match": {"path": "message.intent.region", "op": "region_within", "value": "IN/KA"},
         "effect": "DENY"}
      ]})");
    auto policy = policy_from_json(doc);
    Fixture fx;
    auto envFor = [&](const std::string& region) {
        core::Payload intent = core::Payload::object();
        intent["region"] = region;
        return fx.searchEnvelope("mobility", intent);
    };
    CHECK_FALSE(evaluate_policy(policy, envFor("IN/KA")).allow);
    CHECK_FALSE(evaluate_policy(policy, envFor("IN/KA/BLR")).allow);
    CHECK(evaluate_policy(policy, envFor("IN/KL")).allow);
    CHECK(evaluate_policy(policy, envFor("IN/KARNATAKA")).allow);
}

TEST_CASE("broadcast accounts for every candidate")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    fx.addSubscriber("m2", Role::BPP, {"mobility"});
    fx.addSubscriber("m3", Role::BPP, {"mobility"});
    fx.addSubscriber("r1", Role::BPP, {"retail"});
    fx.addSubscriber("r2", Role::BPP, {"retail"});
    fx.reg.setSubscriberStatus("m3", SubscriberStatus::SUSPENDED);

    Gateway gw({"bg-1", 7}, fx.reg, {});
    CaptureDeliver capture;
    auto bytes = core::encode_envelope(fx.searchEnvelope());
    auto [ack, report] = gw.handleSearch(bytes, fx.resolver(), fx.now,
                                         capture.fn());
    CHECK(ack.ack);
    REQUIRE(report);
    CHECK(report->targets.size() == 2);
    CHECK(report->skipped.size() == 3);

    std::map<std::string, SkipReason> skipped(report->skipped.begin(),
                                              report->skipped.end());
    CHECK(skipped.at("m3") == SkipReason::SUSPENDED);
    CHECK(skipped.at("r1") == SkipReason::DOMAIN_MISMATCH);
    CHECK(skipped.at("r2") == SkipReason::DOMAIN_MISMATCH);

    // Delivered bytes are byte-identical to the input envelope.
    for (const auto& [id, delivered] : capture.delivered)
    {
        CHECK(delivered == bytes);
    }
    // Accounting: targets and skipped partition the candidate set.
    CHECK(report->targets.size() + report->skipped.size() == 5);
}

TEST_CASE("non-search actions are refused")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    Gateway gw({"bg-1", 7}, fx.reg, {});

    core::Envelope e;
    e.context = core::make_context(core::ActionRegistry::core(), "mobility",
                                   "confirm", "bap-1", "mem://bap-1",
                                   fx.ids.next(), 300, fx.now, fx.ids);
    e.message["order"]["id"] = "o-1";
    auto bytes = core::encode_envelope(
        sign::signed_envelope(std::move(e), fx.bapKey, "bap-1", 60'000, fx.now));

    CaptureDeliver capture;
    auto [ack, report] = gw.handleSearch(bytes, fx.resolver(), fx.now,
                                         capture.fn());
    CHECK_FALSE(ack.ack);
    CHECK(ack.error_code == node::kErrNotASearch);
    CHECK_FALSE(report.has_value());
    CHECK(capture.delivered.empty());
}

TEST_CASE("unverified senders are refused")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    Gateway gw({"bg-1", 7}, fx.reg, {});
    CaptureDeliver capture;

    // Unsigned.
    auto unsigned_ = fx.searchEnvelope();
    unsigned_.signature.reset();
    auto [ack1, rep1] = gw.handleSearch(core::encode_envelope(unsigned_),
                                        fx.resolver(), fx.now, capture.fn());
    CHECK_FALSE(ack1.ack);
    CHECK(ack1.error_code == node::kErrSignatureInvalid);

    // Signed by a key the registry does not know.
    auto rogueKey = sign::generate_keypair(sign::kAlgEd25519, 99);
    auto rogue = fx.searchEnvelope();
    rogue.signature =
        sign::sign_envelope(rogue, rogueKey, "bap-rogue", 60'000, fx.now);
    auto [ack2, rep2] = gw.handleSearch(core::encode_envelope(rogue),
                                        fx.resolver(), fx.now, capture.fn());
    CHECK_FALSE(ack2.ack);
    CHECK(ack2.error_code == node::kErrSignatureInvalid);

    // A suspended sender stops verifying (suspension is total).
    fx.reg.setSubscriberStatus("bap-1", SubscriberStatus::SUSPENDED);
    auto [ack3, rep3] = gw.handleSearch(core::encode_envelope(fx.searchEnvelope()),
                                        fx.resolver(), fx.now, capture.fn());
    CHECK_FALSE(ack3.ack);
    CHECK(ack3.error_code == node::kErrSignatureInvalid);
    CHECK(capture.delivered.empty());
}

TEST_CASE("policy-denied searches are never delivered")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    fx.addSubscriber("m2", Role::BPP, {"mobility"});
    Gateway gw({"bg-1", 7}, fx.reg, {fx.quarantine()});
    CaptureDeliver capture;

    core::Payload blocked = core::Payload::object();
    blocked["fulfillment"]["end"]["location"]["zone"] = "Z-QUARANTINE-2";
    blocked["destination"]["category"] = "restaurant";
    auto [ack, report] =
        gw.handleSearch(core::encode_envelope(fx.searchEnvelope("mobility", blocked)),
                        fx.resolver(), fx.now, capture.fn());
    CHECK_FALSE(ack.ack);
    CHECK(ack.error_code == node::kErrPolicyDenied);
    REQUIRE(report);
    CHECK(report->targets.empty());
    CHECK(report->skipped.size() == 2);
    CHECK(capture.delivered.empty());

    // The hospital exception always goes through.
    core::Payload hospital = blocked;
    hospital["destination"]["category"] = "hospital";
    auto [ack2, report2] =
        gw.handleSearch(core::encode_envelope(fx.searchEnvelope("mobility", hospital)),
                        fx.resolver(), fx.now, capture.fn());
    CHECK(ack2.ack);
    REQUIRE(report2);
    CHECK(report2->targets.size() == 2);
    CHECK(capture.delivered.size() == 2);
}

TEST_CASE("zero matching providers still yields a valid report")
{
    Fixture fx;
    Gateway gw({"bg-1", 7}, fx.reg, {});
    CaptureDeliver capture;
    auto [ack, report] =
        gw.handleSearch(core::encode_envelope(fx.searchEnvelope()),
                        fx.resolver(), fx.now, capture.fn());
    CHECK(ack.ack);
    REQUIRE(report);
    CHECK(report->targets.empty());
    CHECK(report->skipped.empty());
}

TEST_CASE("unreachable targets land in skipped with a reason")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    fx.addSubscriber("m2", Role::BPP, {"mobility"});
    Gateway gw({"bg-1", 7}, fx.reg, {});
    CaptureDeliver capture;
    capture.unreachable.insert("m2");

    auto [ack, report] =
        gw.handleSearch(core::encode_envelope(fx.searchEnvelope()),
                        fx.resolver(), fx.now, capture.fn());
    CHECK(ack.ack);
    REQUIRE(report);
    CHECK(report->targets == std::vector<std::string>{"m1"});
    REQUIRE(report->skipped.size() == 1);
    CHECK(report->skipped[0].first == "m2");
    CHECK(report->skipped[0].second == SkipReason::UNREACHABLE);
}

TEST_CASE("a restarted gateway produces identical results")
{
    Fixture fx;
    fx.addSubscriber("m1", Role::BPP, {"mobility"});
    fx.addSubscriber("m2", Role::BPP, {"mobility"});
    fx.addSubscriber("m3", Role::BPP, {"mobility"});
    auto bytes = core::encode_envelope(fx.searchEnvelope());

    CaptureDeliver c1;
    auto r1 = Gateway({"bg-1", 7}, fx.reg, {})
                  .handleSearch(bytes, fx.resolver(), fx.now, c1.fn());

    // "Restart": a brand-new gateway with the same configuration.
    CaptureDeliver c2;
    auto r2 = Gateway({"bg-1", 7}, fx.reg, {})
                  .handleSearch(bytes, fx.resolver(), fx.now, c2.fn());

    CHECK(r1.first == r2.first);
    REQUIRE(r1.second);
    REQUIRE(r2.second);
    CHECK(r1.second->targets == r2.second->targets);
    CHECK(c1.delivered == c2.delivered);
}

TEST_CASE("fair_order is deterministic and permutes")
{
    Fixture fx;
    std::vector<SubscriberRecord> records;
    for (int i = 0; i < 5; ++i)
    {
        SubscriberRecord rec;
        rec.subscriber_id = "p" + std::to_string(i);
        records.push_back(rec);
    }

    auto a = fair_order(records, 7, "txn-1");
    auto b = fair_order(records, 7, "txn-1");
    REQUIRE(a.size() == records.size());
    for (size_t i = 0; i < a.size(); ++i)
    {
        CHECK(a[i].subscriber_id == b[i].subscriber_id);
    }

    // Always a permutation.
    std::set<std::string> ids;
    for (const auto& rec : a)
    {
        ids.insert(rec.subscriber_id);
    }
    CHECK(ids.size() == 5);

    // Single record maps to itself; empty input is an error.
    auto single = fair_order({records[0]}, 7, "txn-9");
    CHECK(single.size() == 1);
    CHECK(single[0].subscriber_id == "p0");
    CHECK_THROWS_AS(fair_order({}, 7, "txn-9"), Error);
}

TEST_CASE("fair_order spreads first positions uniformly")
{
    std::vector<SubscriberRecord> records;
    for (int i = 0; i < 5; ++i)
    {
        SubscriberRecord rec;
        rec.subscriber_id = "p" + std::to_string(i);
        records.push_back(rec);
    }
    core::IdGenerator ids(2026);
    std::map<std::string, int> firsts;
    const int kTrials = 2000; // the acceptance suite runs the full 10,000
    for (int t = 0; t < kTrials; ++t)
    {
        auto ordered = fair_order(records, 7, ids.next());
        firsts[ordered.front().subscriber_id]++;
    }
    // 3-sigma band of binomial(2000, 0.2).
    for (const auto& [id, count] : firsts)
    {
        CHECK(count > 400 - 54);
        CHECK(count < 400 + 54);
    }
}

TEST_SUITE_END();
