// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/node/node.hpp"
#include "txnet/core/errors.hpp"

#include <cmath>

namespace txnet::node {

void
validate_config(const NodeConfig& cfg)
{
    if (cfg.subscriber_id.empty() || cfg.locator.empty())
    {
        raise(Errc::InvalidRecord, "node config needs subscriber_id and locator");
    }
    if (cfg.role == registry::Role::BPP && cfg.supported_domains.empty())
    {
        raise(Errc::InvalidRecord,
              "BPP " + cfg.subscriber_id + " must support at least one domain");
    }
    if (cfg.retry.max_attempts < 1 || cfg.retry.backoff_base <= 0)
    {
        raise(Errc::InvalidRecord, "retry policy must allow at least one attempt");
    }
}

core::Payload
node_config_to_json(const NodeConfig& cfg)
{
    core::Payload doc = core::Payload::object();
    doc["subscriber_id"] = cfg.subscriber_id;
    doc["role"] = registry::role_name(cfg.role);
    doc["domains"] = cfg.supported_domains;
    doc["key"] = sign::keypair_to_json(cfg.keypair);
    doc["locator"] = cfg.locator;
    doc["home_registry_id"] = cfg.home_registry_id;
    doc["retry"]["max_attempts"] = cfg.retry.max_attempts;
    doc["retry"]["backoff_base_ms"] = cfg.retry.backoff_base;
    doc["dedupe_window_ms"] = cfg.dedupe_window;
    doc["signature_validity_ms"] = cfg.signature_validity;
    return doc;
}

NodeConfig
node_config_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("subscriber_id") ||
        !doc.contains("role") || !doc.contains("key") || !doc.contains("locator"))
    {
        raise(Errc::MalformedConfig, "node config missing required fields");
    }
    NodeConfig cfg;
    cfg.subscriber_id = doc.at("subscriber_id").get<std::string>();
    cfg.role = registry::role_from_name(doc.at("role").get<std::string>());
    if (doc.contains("domains"))
    {
        for (const auto& d : doc.at("domains"))
        {
            cfg.supported_domains.insert(d.get<std::string>());
        }
    }
    const auto& key = doc.at("key");
    if (key.contains("seed"))
    {
        cfg.keypair = sign::generate_keypair(
            key.value("algorithm", std::string(sign::kAlgEd25519)),
            key.at("seed").get<std::uint64_t>());
    }
    else
    {
        cfg.keypair = sign::keypair_from_json(key);
    }
    cfg.locator = doc.at("locator").get<std::string>();
    cfg.home_registry_id = doc.value("home_registry_id", "");
    if (doc.contains("retry"))
    {
        cfg.retry.max_attempts = doc.at("retry").value("max_attempts", 5);
        cfg.retry.backoff_base =
            doc.at("retry").value("backoff_base_ms", core::Millis{100});
    }
    cfg.dedupe_window = doc.value("dedupe_window_ms", core::Millis{600'000});
    cfg.signature_validity =
        doc.value("signature_validity_ms", core::Millis{60'000});
    validate_config(cfg);
    return cfg;
}

namespace {

std::string
outcome_verdict(const SendOutcome& outcome)
{
    switch (outcome.kind)
    {
    case SendOutcome::Kind::Acked:
        return outcome.ack.ack ? "ACK"
                               : "NACK:" + outcome.ack.error_code.value_or("");
    case SendOutcome::Kind::Dropped:
        return "DROPPED";
    case SendOutcome::Kind::Partitioned:
        return "PARTITIONED";
    case SendOutcome::Kind::NoRoute:
        return "NO_ROUTE";
    }
    return "?";
}

} // namespace

// ---------------------------------------------------------------------------
// BapNode

struct BapNode::OutgoingSend
{
    std::string to;
    std::string bytes;
    std::string action;
    std::string transaction_id;
    ReceiptPtr receipt;
    int attempts = 0;
};

BapNode::BapNode(NodeConfig cfg, Transport& transport, TimerService& timers,
                 sign::KeyResolver resolve_key, EventLog& log,
                 std::uint64_t id_seed)
    : mConfig(std::move(cfg))
    , mTransport(transport)
    , mTimers(timers)
    , mResolveKey(std::move(resolve_key))
    , mLog(log)
    , mIds(id_seed)
    , mDedupe(mConfig.dedupe_window)
{
    validate_config(mConfig);
}

void
BapNode::setTrustContext(
    const registry::TrustTable* trust,
    std::function<std::string(const std::string&)> home_registry_of)
{
    mTrust = trust;
    mHomeRegistryOf = std::move(home_registry_of);
}

std::pair<std::string, ReceiptPtr>
BapNode::request(const std::string& txn_or_empty, const std::string& action,
                 const std::string& domain, core::Payload payload,
                 const RequestTarget& target)
{
    auto [txn, receipts] =
        requestFanout(txn_or_empty, action, domain, std::move(payload), {target});
    return {txn, receipts.front()};
}

std::pair<std::string, std::vector<ReceiptPtr>>
BapNode::requestFanout(const std::string& txn_or_empty,
                       const std::string& action, const std::string& domain,
                       core::Payload payload,
                       const std::vector<RequestTarget>& targets)
{
    const auto& reg = core::ActionRegistry::core();
    if (!reg.isRequestAction(action))
    {
        raise(Errc::UnknownAction, "'" + action + "' is not a request action");
    }
    if (targets.empty())
    {
        raise(Errc::EmptyInput, "request needs at least one target");
    }
    if (targets.size() > 1 && action != "search")
    {
        raise(Errc::IllegalTransition,
              "only search may fan out to several targets");
    }
    core::Timestamp now = mTimers.now();

    // Cross-network order routing needs an established trust assertion;
    // discovery does not.
    for (const auto& target : targets)
    {
        if (action != "search" && mTrust && target.registry_id &&
            !mConfig.home_registry_id.empty() &&
            *target.registry_id != mConfig.home_registry_id &&
            !mTrust->trusted(mConfig.home_registry_id, *target.registry_id))
        {
            mLog.append({now, mConfig.subscriber_id, "LOCAL", action,
                         txn_or_empty, "TRUST_DENIED"});
            raise(Errc::TrustNotEstablished,
                  "no trust assertion between " + mConfig.home_registry_id +
                      " and " + *target.registry_id);
        }
    }

    std::vector<std::shared_ptr<OutgoingSend>> sends;
    std::string txn;
    {
        std::lock_guard lock(mMutex);
        txn = txn_or_empty.empty() ? mIds.next() : txn_or_empty;
        auto lcIt = mLifecycles.find(txn);
        if (lcIt == mLifecycles.end())
        {
            lcIt = mLifecycles.emplace(txn, core::OrderLifecycle::start(txn)).first;
        }

        core::OrderEvent event;
        event.action = action;
        event.at = now;
        // Reject before any side effect so illegal requests leave no trace.
        if (!core::transition_target(lcIt->second.state, event, reg))
        {
            raise(Errc::IllegalTransition,
                  "'" + action + "' is illegal in state " +
                      core::state_name(lcIt->second.state));
        }

        core::Context ctx =
            core::make_context(reg, domain, action, mConfig.subscriber_id,
                               mConfig.locator, txn,
                               core::default_ttl_seconds(reg, action), now, mIds);
        if (targets.size() == 1)
        {
            ctx.bpp_id = targets.front().bpp_id;
            ctx.bpp_uri = targets.front().bpp_uri;
        }
        event.message_id = ctx.message_id;

        core::Envelope e;
        e.context = ctx;
        e.message = std::move(payload);
        e.signature = sign::sign_envelope(e, mConfig.keypair,
                                          mConfig.subscriber_id,
                                          mConfig.signature_validity, now);

        PendingEntry entry;
        entry.transaction_id = txn;
        entry.message_id = ctx.message_id;
        entry.expected_callback = reg.pairCallback(action);
        entry.deadline = ctx.timestamp + ctx.ttl_seconds * 1000;
        entry.multi_shot = action == "search"; // many providers, one search
        mPending.add(entry);

        lcIt->second = core::order_transition(lcIt->second, event, reg);

        std::string bytes = core::encode_envelope(e);
        for (const auto& target : targets)
        {
            auto send = std::make_shared<OutgoingSend>();
            send->to = target.locator;
            send->bytes = bytes;
            send->action = action;
            send->transaction_id = txn;
            send->receipt = std::make_shared<Receipt>();
            sends.push_back(std::move(send));
        }

        armExpiryTimer(entry.deadline);
    }
    std::vector<ReceiptPtr> receipts;
    for (auto& send : sends)
    {
        runAttempt(send);
        receipts.push_back(send->receipt);
    }
    return {txn, receipts};
}

void
BapNode::armExpiryTimer(core::Timestamp deadline)
{
    // One alarm per pending entry; firing drains everything due by then.
    core::Millis delay = deadline - mTimers.now() + 1;
    mTimers.scheduleAfter(delay > 0 ? delay : 1, [this] { expireDue(); });
}

void
BapNode::runAttempt(std::shared_ptr<OutgoingSend> send)
{
    send->attempts++;
    SendOutcome outcome =
        mTransport.request(mConfig.subscriber_id, send->to, send->bytes);
    mLog.append({mTimers.now(), mConfig.subscriber_id, "SEND", send->action,
                 send->transaction_id, outcome_verdict(outcome)});

    Receipt resolved;
    bool done = false;
    if (outcome.kind == SendOutcome::Kind::Acked)
    {
        std::lock_guard lock(mMutex);
        send->receipt->state =
            outcome.ack.ack ? Receipt::State::Acked : Receipt::State::Nacked;
        send->receipt->ack = outcome.ack;
        send->receipt->attempts = send->attempts;
        resolved = *send->receipt;
        done = true;
    }
    else if (send->attempts >= mConfig.retry.max_attempts)
    {
        {
            std::lock_guard lock(mMutex);
            send->receipt->state = Receipt::State::Failed;
            send->receipt->attempts = send->attempts;
            resolved = *send->receipt;
        }
        mLog.append({mTimers.now(), mConfig.subscriber_id, "LOCAL",
                     send->action, send->transaction_id, "FAILED"});
        done = true;
    }
    else
    {
        core::Millis delay = mConfig.retry.backoff_base
                             << (send->attempts - 1);
        mTimers.scheduleAfter(delay, [this, send] { runAttempt(send); });
    }

    if (done && mHooks.on_receipt)
    {
        mHooks.on_receipt(send->transaction_id, send->action, resolved);
    }
}

Ack
BapNode::handleDelivery(const std::string& bytes)
{
    core::Timestamp now = mTimers.now();
    core::Envelope e;
    try
    {
        e = core::decode_envelope(bytes);
    }
    catch (const Error& err)
    {
        mLog.append({now, mConfig.subscriber_id, "RECV", "?", "?",
                     "NACK:" + std::string(kErrMalformedEnvelope)});
        return Ack::nack(kErrMalformedEnvelope, err.what());
    }
    const auto& reg = core::ActionRegistry::core();
    const std::string& action = e.context.action;
    const std::string& txn = e.context.transaction_id;

    auto nack = [&](const char* code, const std::string& why) {
        mLog.append({now, mConfig.subscriber_id, "RECV", action, txn,
                     "NACK:" + std::string(code)});
        return Ack::nack(code, why);
    };

    if (!reg.isCallback(action))
    {
        return nack(kErrNotACallback, "'" + action + "' is not a callback");
    }
    if (!e.signature)
    {
        return nack(kErrSignatureInvalid, "callback is unsigned");
    }
    auto verdict = sign::verify_envelope(e, *e.signature, mResolveKey, now);
    if (!verdict.valid)
    {
        return nack(kErrSignatureInvalid,
                    sign::verify_failure_name(*verdict.reason));
    }

    Ack ack = Ack::ok();
    std::function<void()> notify;
    {
        std::lock_guard lock(mMutex);
        // Dedupe ahead of the ttl check so a late retry of an
        // already-processed message replays the receipt instead of flapping
        // to TTL_EXPIRED.
        if (mDedupe.check(txn, e.context.message_id, action, now) ==
            DedupeStore::Verdict::Duplicate)
        {
            Ack cached = mDedupe.cached(txn, e.context.message_id, action)
                             .value_or(Ack::ok());
            mLog.append({now, mConfig.subscriber_id, "RECV", action, txn,
                         "DUPLICATE"});
            return cached;
        }
        if (e.context.expired(now))
        {
            Ack expired = Ack::nack(kErrTtlExpired, "callback ttl expired");
            mLog.append({now, mConfig.subscriber_id, "RECV", action, txn,
                         "NACK:" + std::string(kErrTtlExpired)});
            mDedupe.cacheAck(txn, e.context.message_id, action, expired);
            return expired;
        }

        auto matched = mPending.match(txn, action, now);
        if (!matched)
        {
            // Orphan: nothing awaited this. Acknowledge receipt and leave a
            // telemetry trace; orphan floods show up in monitoring.
            mLog.append({now, mConfig.subscriber_id, "RECV", action, txn,
                         "ORPHAN"});
            mDedupe.cacheAck(txn, e.context.message_id, action, ack);
            return ack;
        }

        auto lcIt = mLifecycles.find(txn);
        core::OrderEvent event;
        event.action = action;
        event.message_id = e.context.message_id;
        event.at = now;
        event.fulfillment_complete = core::fulfillment_complete(e.message);
        event.form_link = core::form_link_in(e.message);
        try
        {
            lcIt->second = core::order_transition(lcIt->second, event, reg);
        }
        catch (const Error&)
        {
            mLog.append({now, mConfig.subscriber_id, "RECV", action, txn,
                         "NACK:" + std::string(kErrIllegalState)});
            Ack bad = Ack::nack(kErrIllegalState,
                                "callback out of order for lifecycle");
            mDedupe.cacheAck(txn, e.context.message_id, action, bad);
            return bad;
        }

        if (action == "on_search")
        {
            DiscoveredOffer offer;
            offer.bpp_id = e.context.bpp_id.value_or("");
            offer.bpp_uri = e.context.bpp_uri.value_or("");
            offer.registry_id = mHomeRegistryOf
                                    ? mHomeRegistryOf(offer.bpp_id)
                                    : mConfig.home_registry_id;
            offer.payload = e.message;
            mOffers[txn].push_back(std::move(offer));
        }

        mLog.append(
            {now, mConfig.subscriber_id, "RECV", action, txn, "MATCHED"});
        mDedupe.cacheAck(txn, e.context.message_id, action, ack);

        if (mHooks.on_callback)
        {
            auto state = mLifecycles.at(txn).state;
            auto hook = mHooks.on_callback;
            notify = [hook, txn, e, state] { hook(txn, e, state); };
        }
    }
    if (notify)
    {
        notify();
    }
    return ack;
}

void
BapNode::expireDue()
{
    core::Timestamp now = mTimers.now();
    std::vector<PendingEntry> expired;
    {
        std::lock_guard lock(mMutex);
        expired = mPending.expireDue(now);
    }
    for (const auto& entry : expired)
    {
        mLog.append({now, mConfig.subscriber_id, "LOCAL",
                     entry.expected_callback, entry.transaction_id, "TIMEOUT"});
        if (mHooks.on_timeout)
        {
            mHooks.on_timeout(entry.transaction_id, entry.expected_callback);
        }
    }
}

std::optional<core::OrderLifecycle>
BapNode::lifecycle(const std::string& txn) const
{
    std::lock_guard lock(mMutex);
    auto it = mLifecycles.find(txn);
    if (it == mLifecycles.end())
    {
        return std::nullopt;
    }
    return it->second;
}

std::vector<DiscoveredOffer>
BapNode::offers(const std::string& txn) const
{
    std::lock_guard lock(mMutex);
    auto it = mOffers.find(txn);
    if (it == mOffers.end())
    {
        return {};
    }
    return it->second;
}

size_t
BapNode::pendingCount() const
{
    return mPending.size();
}

std::map<std::string, core::OrderLifecycle>
BapNode::lifecycles() const
{
    std::lock_guard lock(mMutex);
    return mLifecycles;
}

// ---------------------------------------------------------------------------
// BppNode

struct BppNode::OutgoingSend
{
    std::string to;
    std::string bytes;
    std::string action;
    std::string transaction_id;
    int attempts = 0;
};

BppNode::BppNode(NodeConfig cfg, Transport& transport, TimerService& timers,
                 sign::KeyResolver resolve_key, EventLog& log,
                 BusinessHook business, std::uint64_t id_seed)
    : mConfig(std::move(cfg))
    , mTransport(transport)
    , mTimers(timers)
    , mResolveKey(std::move(resolve_key))
    , mLog(log)
    , mBusiness(std::move(business))
    , mIds(id_seed)
    , mDedupe(mConfig.dedupe_window)
{
    validate_config(mConfig);
}

std::pair<Ack, std::optional<core::Envelope>>
BppNode::process(const core::Envelope& e, core::Timestamp now)
{
    auto result = processDetailed(e, now);
    return {std::move(result.ack), std::move(result.callback)};
}

BppNode::ProcessResult
BppNode::processDetailed(const core::Envelope& e, core::Timestamp now)
{
    const auto& reg = core::ActionRegistry::core();
    const std::string& action = e.context.action;
    const std::string& txn = e.context.transaction_id;

    auto seeded = [&](Ack ack) {
        return tamper_ack ? tamper_ack(e, std::move(ack)) : ack;
    };

    if (!e.signature)
    {
        return {seeded(Ack::nack(kErrSignatureInvalid, "request is unsigned")),
                std::nullopt, false};
    }
    auto verdict = sign::verify_envelope(e, *e.signature, mResolveKey, now);
    if (!verdict.valid)
    {
        return {seeded(Ack::nack(kErrSignatureInvalid,
                                 sign::verify_failure_name(*verdict.reason))),
                std::nullopt, false};
    }

    std::lock_guard lock(mMutex);
    if (mDedupe.check(txn, e.context.message_id, action, now) ==
        DedupeStore::Verdict::Duplicate)
    {
        // Cached receipt, no second effect, no second callback.
        return {mDedupe.cached(txn, e.context.message_id, action)
                    .value_or(Ack::ok()),
                std::nullopt, true};
    }
    auto finish = [&](Ack ack) {
        ack = seeded(std::move(ack));
        mDedupe.cacheAck(txn, e.context.message_id, action, ack);
        return ack;
    };

    if (e.context.expired(now))
    {
        return {finish(Ack::nack(kErrTtlExpired, "request ttl expired")),
                std::nullopt, false};
    }
    if (!reg.isRequestAction(action))
    {
        return {finish(Ack::nack(kErrIllegalState,
                                 "providers accept request actions only")),
                std::nullopt, false};
    }
    // Domain gate: providers reject what they do not serve and never emit a
    // callback for it.
    if (!mConfig.supported_domains.count(e.context.domain))
    {
        return {finish(Ack::nack(kErrDomainNotSupported,
                                 "domain '" + e.context.domain +
                                     "' not supported")),
                std::nullopt, false};
    }

    auto lcIt = mLifecycles.find(txn);
    if (lcIt == mLifecycles.end())
    {
        lcIt = mLifecycles.emplace(txn, core::OrderLifecycle::start(txn)).first;
    }
    core::OrderEvent requestEvent;
    requestEvent.action = action;
    requestEvent.message_id = e.context.message_id;
    requestEvent.at = now;
    if (!core::transition_target(lcIt->second.state, requestEvent, reg))
    {
        return {finish(Ack::nack(kErrIllegalState,
                                 "'" + action + "' is illegal in state " +
                                     core::state_name(lcIt->second.state))),
                std::nullopt, false};
    }

    core::Payload reply = mBusiness(action, e);

    core::Envelope cb;
    cb.context = core::make_callback_context(reg, e.context,
                                             mConfig.subscriber_id,
                                             mConfig.locator, now, mIds);
    cb.message = std::move(reply);
    cb.signature = sign::sign_envelope(cb, mConfig.keypair,
                                       mConfig.subscriber_id,
                                       mConfig.signature_validity, now);

    lcIt->second = core::order_transition(lcIt->second, requestEvent, reg);
    core::OrderEvent cbEvent;
    cbEvent.action = cb.context.action;
    cbEvent.message_id = cb.context.message_id;
    cbEvent.at = now;
    cbEvent.fulfillment_complete = core::fulfillment_complete(cb.message);
    cbEvent.form_link = core::form_link_in(cb.message);
    lcIt->second = core::order_transition(lcIt->second, cbEvent, reg);

    if (tamper_callback)
    {
        cb = tamper_callback(std::move(cb));
        if (cb.context.action.empty())
        {
            // Tamper hook swallowed the callback (defect seeding).
            return {finish(Ack::ok()), std::nullopt, false};
        }
    }
    return {finish(Ack::ok()), cb, false};
}

Ack
BppNode::handleDelivery(const std::string& bytes)
{
    core::Timestamp now = mTimers.now();
    core::Envelope e;
    try
    {
        e = core::decode_envelope(bytes);
    }
    catch (const Error& err)
    {
        mLog.append({now, mConfig.subscriber_id, "RECV", "?", "?",
                     "NACK:" + std::string(kErrMalformedEnvelope)});
        Ack nack = Ack::nack(kErrMalformedEnvelope, err.what());
        return tamper_ack ? tamper_ack(core::Envelope{}, nack) : nack;
    }

    auto result = processDetailed(e, now);
    const Ack& ack = result.ack;
    const auto& callback = result.callback;
    std::string verdict =
        result.duplicate
            ? "DUPLICATE"
            : (ack.ack ? "ACK" : "NACK:" + ack.error_code.value_or(""));
    mLog.append({now, mConfig.subscriber_id, "RECV", e.context.action,
                 e.context.transaction_id, verdict});

    if (callback)
    {
        auto send = std::make_shared<OutgoingSend>();
        send->to = e.context.bap_uri;
        send->bytes = core::encode_envelope(*callback);
        send->action = callback->context.action;
        send->transaction_id = callback->context.transaction_id;
        // The receipt is synchronous; the business answer is not. Ship the
        // callback as its own deferred delivery.
        mTimers.scheduleAfter(0, [this, send] { runAttempt(send); });
    }
    return ack;
}

void
BppNode::runAttempt(std::shared_ptr<OutgoingSend> send)
{
    send->attempts++;
    SendOutcome outcome =
        mTransport.request(mConfig.subscriber_id, send->to, send->bytes);
    mLog.append({mTimers.now(), mConfig.subscriber_id, "SEND", send->action,
                 send->transaction_id, outcome_verdict(outcome)});
    if (outcome.kind == SendOutcome::Kind::Acked)
    {
        return;
    }
    if (send->attempts >= mConfig.retry.max_attempts)
    {
        mLog.append({mTimers.now(), mConfig.subscriber_id, "LOCAL",
                     send->action, send->transaction_id, "FAILED"});
        return;
    }
    core::Millis delay = mConfig.retry.backoff_base << (send->attempts - 1);
    mTimers.scheduleAfter(delay, [this, send] { runAttempt(send); });
}

std::optional<core::OrderLifecycle>
BppNode::lifecycle(const std::string& txn) const
{
    std::lock_guard lock(mMutex);
    auto it = mLifecycles.find(txn);
    if (it == mLifecycles.end())
    {
        return std::nullopt;
    }
    return it->second;
}

} // namespace txnet::node
