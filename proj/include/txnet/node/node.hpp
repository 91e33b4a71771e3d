// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/envelope.hpp"
#include "txnet/core/lifecycle.hpp"
#include "txnet/node/dedupe.hpp"
#include "txnet/node/events.hpp"
#include "txnet/node/pending.hpp"
#include "txnet/node/transport.hpp"
#include "txnet/registry/discovery.hpp"
#include "txnet/registry/record.hpp"
#include "txnet/sign/signer.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>

namespace txnet::node {

struct RetryPolicy
{
    int max_attempts = 5;
    core::Millis backoff_base = 100; // exponential: base * 2^(attempt-1)
};

struct NodeConfig
{
    std::string subscriber_id;
    registry::Role role = registry::Role::BAP;
    std::set<std::string> supported_domains; // BPP must serve at least one
    sign::KeyPair keypair;
    std::string locator;          // own endpoint
    std::string home_registry_id; // network this node subscribes to
    RetryPolicy retry;
    core::Millis dedupe_window = 600'000;
    core::Millis signature_validity = 60'000;
};

void validate_config(const NodeConfig& cfg);

core::Payload node_config_to_json(const NodeConfig& cfg);
NodeConfig node_config_from_json(const core::Payload& doc);

// Final receipt of one request after retries. Resolves asynchronously when
// attempts run on a timer; every individual attempt still gets a synchronous
// transport receipt.
struct Receipt
{
    enum class State
    {
        Pending,
        Acked,
        Nacked,
        Failed, // transport failure with retries exhausted
    };

    State state = State::Pending;
    Ack ack;
    int attempts = 0;
};

using ReceiptPtr = std::shared_ptr<Receipt>;

// Where a request goes: the wire locator plus what is known about the
// provider behind it. registry_id drives the cross-network trust check.
struct RequestTarget
{
    std::string locator;
    std::optional<std::string> bpp_id;
    std::optional<std::string> bpp_uri;
    std::optional<std::string> registry_id;
};

// An offer gathered during discovery: who replied and from which network.
struct DiscoveredOffer
{
    std::string bpp_id;
    std::string bpp_uri;
    std::string registry_id;
    core::Payload payload;
};

// Consumer-side engine: issues signed requests, correlates asynchronous
// callbacks, deduplicates deliveries, tracks one lifecycle per transaction.
class BapNode
{
  public:
    struct Hooks
    {
        std::function<void(const std::string& txn, const std::string& action,
                           const Receipt&)>
            on_receipt;
        std::function<void(const std::string& txn, const core::Envelope& cb,
                           core::LifecycleState)>
            on_callback;
        std::function<void(const std::string& txn,
                           const std::string& expected_callback)>
            on_timeout;
    };

    BapNode(NodeConfig cfg, Transport& transport, TimerService& timers,
            sign::KeyResolver resolve_key, EventLog& log,
            std::uint64_t id_seed);

    const NodeConfig& config() const { return mConfig; }

    void setHooks(Hooks hooks) { mHooks = std::move(hooks); }

    // Cross-network guard rails: the trust table plus a resolver from
    // provider id to its home registry. Without them every target is
    // treated as in-network.
    void setTrustContext(const registry::TrustTable* trust,
                         std::function<std::string(const std::string& bpp_id)>
                             home_registry_of);

    // Issues `action` for the given transaction (empty txn starts a fresh
    // lifecycle with a fresh transaction id). Signs, records the pending
    // callback, advances the lifecycle, and runs delivery attempts with
    // exponential backoff. Throws IllegalTransition, UnknownAction,
    // TrustNotEstablished.
    std::pair<std::string, ReceiptPtr>
    request(const std::string& txn_or_empty, const std::string& action,
            const std::string& domain, core::Payload payload,
            const RequestTarget& target);

    // Broadcast variant for discovery: one logical search (one message id,
    // one lifecycle event, one multi-shot pending entry) delivered to
    // several gateways or providers, each with its own receipt.
    std::pair<std::string, std::vector<ReceiptPtr>>
    requestFanout(const std::string& txn_or_empty, const std::string& action,
                  const std::string& domain, core::Payload payload,
                  const std::vector<RequestTarget>& targets);

    // Receive path for callback envelopes; returns the synchronous receipt.
    Ack handleDelivery(const std::string& bytes);

    // Drops expired pending entries, emitting one timeout event each.
    void expireDue();

    std::optional<core::OrderLifecycle> lifecycle(const std::string& txn) const;
    std::vector<DiscoveredOffer> offers(const std::string& txn) const;
    size_t pendingCount() const;
    std::map<std::string, core::OrderLifecycle> lifecycles() const;

  private:
    struct OutgoingSend;

    void runAttempt(std::shared_ptr<OutgoingSend> send);
    void armExpiryTimer(core::Timestamp deadline);

    NodeConfig mConfig;
    Transport& mTransport;
    TimerService& mTimers;
    sign::KeyResolver mResolveKey;
    EventLog& mLog;
    Hooks mHooks;

    const registry::TrustTable* mTrust = nullptr;
    std::function<std::string(const std::string&)> mHomeRegistryOf;

    mutable std::mutex mMutex;
    core::IdGenerator mIds;
    PendingTable mPending;
    DedupeStore mDedupe;
    std::map<std::string, core::OrderLifecycle> mLifecycles;
    std::map<std::string, std::vector<DiscoveredOffer>> mOffers;
};

// Provider-side business logic: payload in, payload out, per action. The
// engine owns everything else (signatures, dedupe, lifecycle, callbacks).
using BusinessHook = std::function<core::Payload(const std::string& action,
                                                 const core::Envelope& request)>;

// Provider-side engine: enforces domain support, answers with the paired
// callback, never emits for a domain it does not serve.
class BppNode
{
  public:
    BppNode(NodeConfig cfg, Transport& transport, TimerService& timers,
            sign::KeyResolver resolve_key, EventLog& log, BusinessHook business,
            std::uint64_t id_seed);

    const NodeConfig& config() const { return mConfig; }

    // Pure processing step: receipt plus the callback envelope to send (if
    // any). No transmission side effects; useful on its own in tests and in
    // the certification bot.
    std::pair<Ack, std::optional<core::Envelope>> process(const core::Envelope& e,
                                                          core::Timestamp now);

    struct ProcessResult
    {
        Ack ack;
        std::optional<core::Envelope> callback;
        bool duplicate = false;
    };

    ProcessResult processDetailed(const core::Envelope& e, core::Timestamp now);

    // Full receive path: decode, process, schedule the callback send with
    // retries toward the requester's uri.
    Ack handleDelivery(const std::string& bytes);

    std::optional<core::OrderLifecycle> lifecycle(const std::string& txn) const;

    // Callback envelope transformer, applied after signing. Exists for the
    // certification bot's defect seeding; identity in production paths.
    std::function<core::Envelope(core::Envelope)> tamper_callback;
    // When set, replaces outgoing acks (defect seeding again).
    std::function<Ack(const core::Envelope& request, Ack)> tamper_ack;

  private:
    struct OutgoingSend;

    void runAttempt(std::shared_ptr<OutgoingSend> send);

    NodeConfig mConfig;
    Transport& mTransport;
    TimerService& mTimers;
    sign::KeyResolver mResolveKey;
    EventLog& mLog;
    BusinessHook mBusiness;

    mutable std::mutex mMutex;
    core::IdGenerator mIds;
    DedupeStore mDedupe;
    std::map<std::string, core::OrderLifecycle> mLifecycles;
};

} // namespace txnet::node
