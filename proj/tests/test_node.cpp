// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/errors.hpp"
#include "txnet/node/node.hpp"
#include "txnet/node/reference.hpp"
#include "txnet/sim/transport.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace txnet;
using namespace txnet::node;
using txnet::sim::Scheduler;
using txnet::sim::SimTransport;
using txnet::sim::TransportConfig;

namespace {

NodeConfig
make_config(const std::string& id, registry::Role role,
            std::set<std::string> domains)
{
    NodeConfig cfg;
    cfg.subscriber_id = id;
    cfg.role = role;
    cfg.supported_domains = std::move(domains);
    cfg.keypair = sign::generate_keypair(sign::kAlgEd25519,
                                         std::hash<std::string>{}(id));
    cfg.locator = "mem://" + id;
    cfg.home_registry_id = "reg-a";
    return cfg;
}

// A tiny self-contained rig: one BAP, one BPP, a key resolver over both.
struct Rig
{
    Scheduler scheduler;
    TransportConfig tcfg;
    std::unique_ptr<SimTransport> transport;
    EventLog log;
    NodeConfig bapCfg = make_config("bap-1", registry::Role::BAP, {});
    NodeConfig bppCfg = make_config("bpp-1", registry::Role::BPP, {"mobility"});
    std::unique_ptr<BapNode> bap;
    std::unique_ptr<BppNode> bpp;

    explicit Rig(double drop = 0.0, std::uint64_t seed = 7)
    {
        tcfg.drop_probability = drop;
        tcfg.seed = seed;
        tcfg.latency.lo = tcfg.latency.hi = 5;
        transport = std::make_unique<SimTransport>(tcfg, scheduler);

        auto resolver = [this](const std::string& sid, const std::string& kid)
            -> std::optional<sign::Bytes> {
            for (const NodeConfig* cfg : {&bapCfg, &bppCfg})
            {
                if (cfg->subscriber_id == sid && cfg->keypair.key_id == kid)
                {
                    return cfg->keypair.verification_key;
                }
            }
            return std::nullopt;
        };

        bap = std::make_unique<BapNode>(bapCfg, *transport, scheduler, resolver,
                                        log, 11);
        bpp = std::make_unique<BppNode>(bppCfg, *transport, scheduler, resolver,
                                        log, ReferenceBusiness::make("bpp-1"),
                                        22);
        transport->bind(bapCfg.locator, "bap-1",
                        [this](const std::string& b) {
                            return bap->handleDelivery(b);
                        });
        transport->bind(bppCfg.locator, "bpp-1",
                        [this](const std::string& b) {
                            return bpp->handleDelivery(b);
                        });
    }

    RequestTarget bppTarget() const
    {
        return {bppCfg.locator, "bpp-1", bppCfg.locator, "reg-a"};
    }
};

} // namespace

TEST_SUITE_BEGIN("node-engine");

TEST_CASE("a search request acks and moves the lifecycle to DISCOVERING")
{
    Rig rig;
    auto [txn, receipt] =
        rig.bap->request("", "search", "mobility",
                         reference_request_payload("mobility", "search", "t"),
                         {rig.bppCfg.locator, std::nullopt, std::nullopt,
                          std::nullopt});
    CHECK(receipt->state == Receipt::State::Acked);
    CHECK(receipt->ack.ack);
    CHECK(receipt->attempts == 1);
    REQUIRE(rig.bap->lifecycle(txn));
    CHECK(rig.bap->lifecycle(txn)->state == core::LifecycleState::DISCOVERING);
    CHECK(rig.bap->pendingCount() == 1);

    // The provider's on_search callback arrives once the queue drains.
    rig.scheduler.run();
    CHECK(rig.bap->lifecycle(txn)->state ==
          core::LifecycleState::OFFERS_RECEIVED);
    REQUIRE(rig.bap->offers(txn).size() == 1);
    CHECK(rig.bap->offers(txn)[0].bpp_id == "bpp-1");
}

TEST_CASE("requests that are illegal in the current state never leave the node")
{
    Rig rig;
    CHECK_THROWS_AS(rig.bap->request("", "confirm", "mobility",
                                     core::Payload::object(), rig.bppTarget()),
                    Error);
    CHECK(rig.bap->pendingCount() == 0);
    CHECK(rig.log.size() == 0); // no trace of the refused request
}

TEST_CASE("an unreachable target fails after exactly max_attempts tries")
{
    Rig rig;
    rig.bapCfg.retry.max_attempts = 3;
    rig.bap = std::make_unique<BapNode>(rig.bapCfg, *rig.transport,
                                        rig.scheduler,
                                        [](const std::string&, const std::string&)
                                            -> std::optional<sign::Bytes> {
                                            return std::nullopt;
                                        },
                                        rig.log, 11);
    auto [txn, receipt] = rig.bap->request(
        "", "search", "mobility", core::Payload::object(),
        {"mem://nowhere", std::nullopt, std::nullopt, std::nullopt});
    rig.scheduler.run();
    CHECK(receipt->state == Receipt::State::Failed);
    CHECK(receipt->attempts == 3);

    // The fault-injection oracle: count the delivery attempts in the log.
    int attempts = 0;
    for (const auto& rec : rig.log.records())
    {
        if (rec.direction == "SEND" && rec.action == "search")
        {
            attempts++;
        }
    }
    CHECK(attempts == 3);
}

TEST_CASE("three providers answer one search; all three offers correlate")
{
    Rig rig;
    // Two more providers on the same transport.
    auto cfg2 = make_config("bpp-2", registry::Role::BPP, {"mobility"});
    auto cfg3 = make_config("bpp-3", registry::Role::BPP, {"mobility"});
    auto resolver = [&](const std::string& sid, const std::string& kid)
        -> std::optional<sign::Bytes> {
        for (const NodeConfig* cfg : {&rig.bapCfg, &rig.bppCfg, &cfg2, &cfg3})
        {
            if (cfg->subscriber_id == sid && cfg->keypair.key_id == kid)
            {
                return cfg->keypair.verification_key;
            }
        }
        return std::nullopt;
    };
    rig.bap = std::make_unique<BapNode>(rig.bapCfg, *rig.transport,
                                        rig.scheduler, resolver, rig.log, 11);
    transport_rebind:
    rig.transport->bind(rig.bapCfg.locator, "bap-1",
                        [&](const std::string& b) {
                            return rig.bap->handleDelivery(b);
                        });
    BppNode bpp2(cfg2, *rig.transport, rig.scheduler, resolver, rig.log,
                 ReferenceBusiness::make("bpp-2"), 33);
    BppNode bpp3(cfg3, *rig.transport, rig.scheduler, resolver, rig.log,
                 ReferenceBusiness::make("bpp-3"), 44);
    rig.transport->bind(cfg2.locator, "bpp-2",
                        [&](const std::string& b) { return bpp2.handleDelivery(b); });
    rig.transport->bind(cfg3.locator, "bpp-3",
                        [&](const std::string& b) { return bpp3.handleDelivery(b); });

    auto [txn, receipt] = rig.bap->request(
        "", "search", "mobility",
        reference_request_payload("mobility", "search", "t"), rig.bppTarget());
    // Deliver the same search to the other two providers directly (as a
    // gateway fan-out would).
    // Reuse the bytes the first provider saw.
    auto delivered = rig.transport->deliveredBytes();
    REQUIRE(!delivered.empty());
    std::string bytes = delivered.front().second;
    (void)bpp2.handleDelivery(bytes);
    (void)bpp3.handleDelivery(bytes);
    rig.scheduler.run();

    auto offers = rig.bap->offers(txn);
    CHECK(offers.size() == 3);
    CHECK(rig.bap->lifecycle(txn)->state ==
          core::LifecycleState::OFFERS_RECEIVED);
    // history: search + three on_search matches
    CHECK(rig.bap->lifecycle(txn)->history.size() == 4);
    (void)receipt;
}

TEST_CASE("callbacks with unknown transactions are orphans")
{
    Rig rig;
    core::IdGenerator ids(5);
    core::Envelope cb;
    cb.context = core::make_context(core::ActionRegistry::core(), "mobility",
                                    "on_confirm", "bap-1", rig.bapCfg.locator,
                                    ids.next(), 300, rig.scheduler.now(), ids);
    cb.context.bpp_id = "bpp-1";
    cb.context.bpp_uri = rig.bppCfg.locator;
    cb.message["order"]["id"] = "o-1";
    cb.signature = sign::sign_envelope(cb, rig.bppCfg.keypair, "bpp-1", 60'000,
                                       rig.scheduler.now());
    auto ack = rig.bap->handleDelivery(core::encode_envelope(cb));
    CHECK(ack.ack); // orphans are acknowledged and logged, not errors
    bool sawOrphan = false;
    for (const auto& rec : rig.log.records())
    {
        sawOrphan |= rec.verdict == "ORPHAN";
    }
    CHECK(sawOrphan);
}

TEST_CASE("full lifecycle completes against the reference provider")
{
    Rig rig;
    auto [txn, r1] = rig.bap->request(
        "", "search", "mobility",
        reference_request_payload("mobility", "search", "t"), rig.bppTarget());
    rig.scheduler.run();
    REQUIRE(rig.bap->lifecycle(txn)->state ==
            core::LifecycleState::OFFERS_RECEIVED);

    for (const char* action : {"select", "init", "confirm", "status"})
    {
        rig.bap->request(txn, action, "mobility",
                         reference_request_payload("mobility", action, txn),
                         rig.bppTarget());
        rig.scheduler.run();
    }
    CHECK(rig.bap->lifecycle(txn)->state == core::LifecycleState::COMPLETED);
    CHECK(rig.bpp->lifecycle(txn)->state == core::LifecycleState::COMPLETED);
    // Timeout completeness: after the ttl horizon everything drains.
    CHECK(rig.bap->pendingCount() <= 1); // the multi-shot search entry
    rig.scheduler.run();
    CHECK(rig.bap->pendingCount() == 0);
}

TEST_CASE("cross-domain requests are NACKed with DOMAIN_NOT_SUPPORTED")
{
    Rig rig; // provider serves mobility only
    auto [txn, receipt] = rig.bap->request(
        "", "search", "retail",
        reference_request_payload("retail", "search", "t"), rig.bppTarget());
    CHECK(receipt->state == Receipt::State::Nacked);
    CHECK(receipt->ack.error_code == kErrDomainNotSupported);
    rig.scheduler.run();
    // No callback was emitted for the unsupported domain.
    CHECK(rig.bap->offers(txn).empty());
}

TEST_CASE("a financial-services init carries a form link into the lifecycle")
{
    Rig rig;
    rig.bppCfg.supported_domains = {"financial-services"};
    rig.bpp = std::make_unique<BppNode>(
        rig.bppCfg, *rig.transport, rig.scheduler,
        [&](const std::string& sid, const std::string& kid)
            -> std::optional<sign::Bytes> {
            for (const NodeConfig* cfg : {&rig.bapCfg, &rig.bppCfg})
            {
                if (cfg->subscriber_id == sid && cfg->keypair.key_id == kid)
                {
                    return cfg->keypair.verification_key;
                }
            }
            return std::nullopt;
        },
        rig.log, ReferenceBusiness::make("bpp-1"), 22);
    rig.transport->bind(rig.bppCfg.locator, "bpp-1",
                        [&](const std::string& b) {
                            return rig.bpp->handleDelivery(b);
                        });

    const std::string domain = "financial-services";
    auto [txn, r] = rig.bap->request(
        "", "search", domain, reference_request_payload(domain, "search", "t"),
        rig.bppTarget());
    rig.scheduler.run();
    for (const char* action : {"select", "init"})
    {
        rig.bap->request(txn, action, domain,
                         reference_request_payload(domain, action, txn),
                         rig.bppTarget());
        rig.scheduler.run();
    }
    auto lc = rig.bap->lifecycle(txn);
    REQUIRE(lc);
    CHECK(lc->state == core::LifecycleState::TERMS_OFFERED);
    REQUIRE(lc->form_link);
    CHECK(lc->form_link->rfind("https://forms.example/", 0) == 0);
}

TEST_CASE("tampered envelopes are NACKed with SIGNATURE_INVALID")
{
    Rig rig;
    core::IdGenerator ids(5);
    auto now = rig.scheduler.now();
    core::Envelope e;
    e.context = core::make_context(core::ActionRegistry::core(), "mobility",
                                   "search", "bap-1", rig.bapCfg.locator,
                                   ids.next(), 30, now, ids);
    e.message = reference_request_payload("mobility", "search", "t");
    e.signature = sign::sign_envelope(e, rig.bapCfg.keypair, "bap-1", 60'000, now);
    e.message["intent"]["passengers"] = 99; // tamper after signing

    auto ack = rig.bpp->handleDelivery(core::encode_envelope(e));
    CHECK_FALSE(ack.ack);
    CHECK(ack.error_code == kErrSignatureInvalid);

    // Unsigned requests meet the same fate.
    e.signature.reset();
    ack = rig.bpp->handleDelivery(core::encode_envelope(e));
    CHECK_FALSE(ack.ack);
    CHECK(ack.error_code == kErrSignatureInvalid);
}

TEST_CASE("expired requests are NACKed with TTL_EXPIRED")
{
    Rig rig;
    core::IdGenerator ids(5);
    core::Timestamp past{-120'000}; // two minutes before the virtual epoch
    core::Envelope e;
    e.context = core::make_context(core::ActionRegistry::core(), "mobility",
                                   "search", "bap-1", rig.bapCfg.locator,
                                   ids.next(), 30, past, ids);
    e.message = reference_request_payload("mobility", "search", "t");
    e.signature =
        sign::sign_envelope(e, rig.bapCfg.keypair, "bap-1", 600'000, past);
    auto ack = rig.bpp->handleDelivery(core::encode_envelope(e));
    CHECK_FALSE(ack.ack);
    CHECK(ack.error_code == kErrTtlExpired);
}

TEST_CASE("duplicate deliveries advance the lifecycle exactly once")
{
    Rig rig;
    // Bounded horizons: the duplicate must arrive at realistic retry
    // distance, not after the full ttl drain.
    auto runFor = [&](core::Millis ms) {
        rig.scheduler.run(rig.scheduler.now() + ms);
    };
    auto [txn, r1] = rig.bap->request(
        "", "search", "mobility",
        reference_request_payload("mobility", "search", "t"), rig.bppTarget());
    runFor(1000);
    for (const char* action : {"select", "init", "confirm"})
    {
        rig.bap->request(txn, action, "mobility",
                         reference_request_payload("mobility", action, txn),
                         rig.bppTarget());
        runFor(1000);
    }
    REQUIRE(rig.bap->lifecycle(txn)->state == core::LifecycleState::ACTIVE);
    size_t historyBefore = rig.bap->lifecycle(txn)->history.size();

    // Redeliver the provider's on_confirm byte-for-byte (a transport retry).
    std::string onConfirmBytes;
    for (const auto& [to, bytes] : rig.transport->deliveredBytes())
    {
        if (to == "bap-1" &&
            bytes.find("\"action\":\"on_confirm\"") != std::string::npos)
        {
            onConfirmBytes = bytes;
        }
    }
    REQUIRE(!onConfirmBytes.empty());
    auto ack = rig.bap->handleDelivery(onConfirmBytes);
    CHECK(ack.ack); // cached receipt
    CHECK(rig.bap->lifecycle(txn)->history.size() == historyBefore);
    CHECK(rig.bap->lifecycle(txn)->state == core::LifecycleState::ACTIVE);

    bool sawDuplicate = false;
    for (const auto& rec : rig.log.records())
    {
        sawDuplicate |= rec.verdict == "DUPLICATE" && rec.node == "bap-1";
    }
    CHECK(sawDuplicate);
}

TEST_CASE("the provider deduplicates retried requests and replays the receipt")
{
    Rig rig;
    core::IdGenerator ids(5);
    auto now = rig.scheduler.now();
    core::Envelope e;
    e.context = core::make_context(core::ActionRegistry::core(), "mobility",
                                   "search", "bap-1", rig.bapCfg.locator,
                                   ids.next(), 30, now, ids);
    e.message = reference_request_payload("mobility", "search", "t");
    e.signature = sign::sign_envelope(e, rig.bapCfg.keypair, "bap-1", 60'000, now);
    auto bytes = core::encode_envelope(e);

    auto first = rig.bpp->handleDelivery(bytes);
    auto second = rig.bpp->handleDelivery(bytes);
    CHECK(first == second);
    // Only one callback was scheduled.
    size_t onSearchSends = 0;
    rig.scheduler.run();
    for (const auto& rec : rig.log.records())
    {
        if (rec.node == "bpp-1" && rec.direction == "SEND" &&
            rec.action == "on_search")
        {
            onSearchSends++;
        }
    }
    CHECK(onSearchSends == 1);
}

TEST_CASE("dedupe: fresh, duplicate, and window expiry")
{
    DedupeStore store(1000);
    core::Timestamp t0{0};
    CHECK(store.check("t", "m", "search", t0) == DedupeStore::Verdict::Fresh);
    CHECK(store.check("t", "m", "search", t0 + 10) ==
          DedupeStore::Verdict::Duplicate);
    // Same message after the window: fresh again (the window is a bound).
    CHECK(store.check("t", "m", "search", t0 + 2000) ==
          DedupeStore::Verdict::Fresh);
}

TEST_CASE("dedupe: 1,000 random triples collide exactly as often as the oracle")
{
    testgen::Rand r(606);
    DedupeStore store(3'600'000);
    std::set<std::tuple<std::string, std::string, std::string>> oracle;
    core::IdGenerator ids(909);
    for (int i = 0; i < 1000; ++i)
    {
        std::string txn = ids.next();
        std::string msg = ids.next();
        std::string action = r.chance(0.5) ? "search" : "confirm";
        bool oracleFresh = oracle.insert({txn, msg, action}).second;
        auto verdict = store.check(txn, msg, action, core::Timestamp{i});
        CHECK((verdict == DedupeStore::Verdict::Fresh) == oracleFresh);
    }
}

TEST_CASE("pending entries expire exactly once and the table drains")
{
    Rig rig;
    auto [txn, receipt] = rig.bap->request(
        "", "search", "mobility",
        reference_request_payload("mobility", "search", "t"),
        {"mem://nowhere", std::nullopt, std::nullopt, std::nullopt});
    (void)receipt;
    CHECK(rig.bap->pendingCount() == 1);
    rig.scheduler.run(); // retries fail, then the expiry alarm fires
    CHECK(rig.bap->pendingCount() == 0);

    int timeouts = 0;
    for (const auto& rec : rig.log.records())
    {
        if (rec.verdict == "TIMEOUT" && rec.transaction_id == txn)
        {
            timeouts++;
        }
    }
    CHECK(timeouts == 1);
}

TEST_CASE("cross-network orders require a trust assertion")
{
    Rig rig;
    registry::TrustTable trust;
    rig.bap->setTrustContext(&trust, [](const std::string&) { return "reg-b"; });

    auto [txn, r1] = rig.bap->request(
        "", "search", "mobility",
        reference_request_payload("mobility", "search", "t"),
        {rig.bppCfg.locator, "bpp-1", rig.bppCfg.locator, "reg-b"});
    rig.scheduler.run();
    REQUIRE(rig.bap->lifecycle(txn)->state ==
            core::LifecycleState::OFFERS_RECEIVED);

    // No assertion between reg-a and reg-b: the select is refused locally.
    RequestTarget remote{rig.bppCfg.locator, "bpp-1", rig.bppCfg.locator,
                         "reg-b"};
    CHECK_THROWS_AS(rig.bap->request(txn, "select", "mobility",
                                     reference_request_payload("mobility",
                                                               "select", txn),
                                     remote),
                    Error);
    bool sawTrustDenied = false;
    for (const auto& rec : rig.log.records())
    {
        sawTrustDenied |= rec.verdict == "TRUST_DENIED";
    }
    CHECK(sawTrustDenied);

    // With the assertion in place the order can proceed.
    trust.assertTrust("reg-a", "reg-b");
    rig.bap->request(txn, "select", "mobility",
                     reference_request_payload("mobility", "select", txn),
                     remote);
    rig.scheduler.run();
    CHECK(rig.bap->lifecycle(txn)->state == core::LifecycleState::QUOTED);
}

TEST_CASE("node configs round-trip through the canonical encoding")
{
    auto cfg = make_config("bpp-9", registry::Role::BPP, {"energy", "mobility"});
    cfg.retry.max_attempts = 4;
    cfg.retry.backoff_base = 250;
    auto doc = node_config_to_json(cfg);
    auto back = node_config_from_json(doc);
    CHECK(back.subscriber_id == cfg.subscriber_id);
    CHECK(back.supported_domains == cfg.supported_domains);
    CHECK(back.keypair == cfg.keypair);
    CHECK(back.retry.max_attempts == 4);

    // Seed-style key specs generate deterministically.
    auto seeded = core::Payload::parse(R"({
      "subscriber_id": "bpp-s", "role": "BPP", "domains": ["retail"],
      "key": {"algorithm": "ed25519", "seed": 42},
      "locator": "mem://bpp-s"
    })");
    auto a = node_config_from_json(seeded);
    auto b = node_config_from_json(seeded);
    CHECK(a.keypair == b.keypair);

    CHECK_THROWS_AS(node_config_from_json(core::Payload::parse(R"({
      "subscriber_id": "bpp-x", "role": "BPP", "domains": [],
      "key": {"algorithm": "ed25519", "seed": 1}, "locator": "mem://x"
    })")),
                    Error);
}

TEST_SUITE_END();
