// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/gateway/gateway.hpp"
#include "txnet/core/errors.hpp"

#include <algorithm>
#include <random>

namespace txnet::gateway {

const char*
skip_reason_name(SkipReason r)
{
    switch (r)
    {
    case SkipReason::POLICY_DENIED:
        return "POLICY_DENIED";
    case SkipReason::SUSPENDED:
        return "SUSPENDED";
    case SkipReason::DOMAIN_MISMATCH:
        return "DOMAIN_MISMATCH";
    case SkipReason::UNREACHABLE:
        return "UNREACHABLE";
    }
    return "?";
}

namespace {

std::uint64_t
fnv1a(const std::string& s, std::uint64_t h)
{
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::vector<registry::SubscriberRecord>
fair_order(std::vector<registry::SubscriberRecord> records,
           std::uint64_t fairness_seed, const std::string& transaction_id)
{
    if (records.empty())
    {
        raise(Errc::EmptyInput, "fair_order needs at least one record");
    }
    // Keyed permutation: the shuffle stream depends only on (seed, txn id).
    std::uint64_t key = fnv1a(transaction_id, 14695981039346656037ULL ^
                                                  (fairness_seed * 0x9e3779b97f4a7c15ULL));
    std::mt19937_64 rng(key);
    for (size_t i = records.size() - 1; i > 0; --i)
    {
        std::uniform_int_distribution<size_t> d(0, i);
        std::swap(records[i], records[d(rng)]);
    }
    return records;
}

std::pair<node::Ack, std::optional<BroadcastReport>>
Gateway::handleSearch(const std::string& bytes,
                      const sign::KeyResolver& resolve_key, core::Timestamp now,
                      const DeliverFn& deliver) const
{
    core::Envelope e;
    try
    {
        e = core::decode_envelope(bytes);
    }
    catch (const Error& err)
    {
        return {node::Ack::nack(node::kErrMalformedEnvelope, err.what()),
                std::nullopt};
    }

    if (e.context.action != "search")
    {
        // Post-discovery interactions are peer-to-peer; the gateway only
        // broadcasts discovery.
        return {node::Ack::nack(node::kErrNotASearch,
                                "gateway only handles search, got '" +
                                    e.context.action + "'"),
                std::nullopt};
    }
    if (e.context.expired(now))
    {
        return {node::Ack::nack(node::kErrTtlExpired, "search ttl expired"),
                std::nullopt};
    }
    if (!e.signature)
    {
        return {node::Ack::nack(node::kErrSignatureInvalid,
                                "search is unsigned"),
                std::nullopt};
    }
    auto verdict = sign::verify_envelope(e, *e.signature, resolve_key, now);
    if (!verdict.valid)
    {
        return {node::Ack::nack(node::kErrSignatureInvalid,
                                std::string("sender unverified: ") +
                                    sign::verify_failure_name(*verdict.reason)),
                std::nullopt};
    }

    BroadcastReport report;
    report.transaction_id = e.context.transaction_id;
    report.policy = evaluate_policies(mPolicies, e);

    // Candidate accounting runs over the full snapshot so suspended
    // providers are visible with a reason; routing still never reaches them.
    std::vector<registry::SubscriberRecord> eligible;
    for (const auto& rec : mRegistry.snapshot())
    {
        if (rec.role != registry::Role::BPP)
        {
            continue;
        }
        if (!report.policy.allow)
        {
            report.skipped.emplace_back(rec.subscriber_id,
                                        SkipReason::POLICY_DENIED);
            continue;
        }
        if (rec.status != registry::SubscriberStatus::ACTIVE)
        {
            report.skipped.emplace_back(rec.subscriber_id, SkipReason::SUSPENDED);
            continue;
        }
        if (!rec.domains.count(e.context.domain))
        {
            report.skipped.emplace_back(rec.subscriber_id,
                                        SkipReason::DOMAIN_MISMATCH);
            continue;
        }
        eligible.push_back(rec);
    }

    if (!report.policy.allow)
    {
        return {node::Ack::nack(node::kErrPolicyDenied,
                                "denied by policy " + report.policy.denied_by),
                report};
    }

    if (!eligible.empty())
    {
        for (const auto& rec :
             fair_order(std::move(eligible), mConfig.fairness_seed,
                        e.context.transaction_id))
        {
            if (deliver(rec, bytes))
            {
                report.targets.push_back(rec.subscriber_id);
            }
            else
            {
                report.skipped.emplace_back(rec.subscriber_id,
                                            SkipReason::UNREACHABLE);
            }
        }
    }
    return {node::Ack::ok(), report};
}

} // namespace txnet::gateway
