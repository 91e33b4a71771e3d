// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/gateway/policy.hpp"
#include "txnet/node/ack.hpp"
#include "txnet/registry/registry.hpp"
#include "txnet/sign/signer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace txnet::gateway {

enum class SkipReason
{
    POLICY_DENIED,
    SUSPENDED,
    DOMAIN_MISMATCH,
    UNREACHABLE,
};

const char* skip_reason_name(SkipReason r);

// Accounting for one broadcast: every candidate from the registry lookup
// lands in exactly one of targets or skipped.
struct BroadcastReport
{
    std::string transaction_id;
    std::vector<std::string> targets; // fair listing order
    std::vector<std::pair<std::string, SkipReason>> skipped;
    PolicyVerdict policy;
};

// Deterministic equal-treatment permutation keyed on (seed, transaction_id).
// Deterministic so it survives gateway restarts and can be audited; uniform
// across transaction ids so no provider systematically lists first. Throws
// EmptyInput on an empty record set.
std::vector<registry::SubscriberRecord>
fair_order(std::vector<registry::SubscriberRecord> records,
           std::uint64_t fairness_seed, const std::string& transaction_id);

// Delivery hook the transport supplies; false means the send failed.
using DeliverFn = std::function<bool(const registry::SubscriberRecord& target,
                                     const std::string& bytes)>;

struct GatewayConfig
{
    std::string subscriber_id;
    std::uint64_t fairness_seed = 0;
};

// Discovery infrastructure: broadcasts search requests to every matching
// provider under the configured policies. Holds no per-transaction state, so
// a restarted gateway behaves identically.
class Gateway
{
  public:
    Gateway(GatewayConfig config, const registry::Registry& reg,
            std::vector<Policy> policies)
        : mConfig(std::move(config)), mRegistry(reg), mPolicies(std::move(policies))
    {
    }

    const GatewayConfig& config() const { return mConfig; }

    // Full receive path: decode, search-only check, sender verification,
    // policy evaluation, candidate accounting, fair-ordered delivery of the
    // input bytes (byte-identical; the gateway may not editorialize).
    // Returns the receipt for the sender plus the report when a broadcast
    // was attempted.
    std::pair<node::Ack, std::optional<BroadcastReport>>
    handleSearch(const std::string& bytes, const sign::KeyResolver& resolve_key,
                 core::Timestamp now, const DeliverFn& deliver) const;

  private:
    GatewayConfig mConfig;
    const registry::Registry& mRegistry;
    std::vector<Policy> mPolicies;
};

} // namespace txnet::gateway
