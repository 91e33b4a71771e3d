// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/envelope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace txnet::gateway {

// Predicate over an envelope. Paths are rooted at "context" or "message".
// region_within treats region codes as slash-separated hierarchies:
// "IN/KA/BLR" is within "IN/KA" and within "IN".
struct Predicate
{
    enum class Op
    {
        Equals,
        InSet,
        RegionWithin,
    };

    core::FieldPath path;
    Op op = Op::Equals;
    std::vector<std::string> values; // one entry for Equals/RegionWithin

    bool matches(const core::Payload& envelope_doc) const;
};

struct Rule
{
    enum class Effect
    {
        ALLOW,
        DENY,
    };

    Predicate match;
    Effect effect = Effect::DENY;
    std::vector<Predicate> exceptions; // any match overrides a DENY
};

// Machine-readable broadcast policy. Evaluation is deterministic: first
// matching rule wins; exceptions turn a matched DENY into an ALLOW.
struct Policy
{
    std::string policy_id;
    std::optional<std::string> scope_domain;
    std::optional<std::string> scope_action;
    std::vector<Rule> rules;
};

struct PolicyVerdict
{
    bool allow = true;
    std::string denied_by; // policy id when allow == false

    static PolicyVerdict allowed() { return {}; }
    static PolicyVerdict denied(std::string policy_id)
    {
        return {false, std::move(policy_id)};
    }
};

// Envelopes outside the policy's scope get a vacuous ALLOW.
PolicyVerdict evaluate_policy(const Policy& p, const core::Envelope& e);

// First DENY across the set wins; empty set allows everything.
PolicyVerdict evaluate_policies(const std::vector<Policy>& ps,
                                const core::Envelope& e);

// Throws MalformedPolicy on structural problems (unknown op/effect, paths
// rooted outside context/message, missing fields).
Policy policy_from_json(const core::Payload& doc);
core::Payload policy_to_json(const Policy& p);
Policy load_policy_file(const std::string& path);
std::vector<Policy> load_policy_dir(const std::string& dir);

} // namespace txnet::gateway
