// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/payload.hpp"
#include "txnet/core/time.hpp"
#include "txnet/sign/signature_header.hpp"

#include <optional>
#include <set>
#include <string>

namespace txnet::registry {

enum class Role
{
    BAP, // consumer-facing application platform
    BPP, // provider platform
    BG,  // gateway
    BR,  // registry
};

const char* role_name(Role r);
Role role_from_name(const std::string& name);

enum class SubscriberStatus
{
    ACTIVE,
    SUSPENDED,
};

const char* status_name(SubscriberStatus s);
SubscriberStatus status_from_name(const std::string& name);

// Publicly visible metadata for one network participant, including the
// verification key other parties resolve when checking signatures.
struct SubscriberRecord
{
    std::string subscriber_id;
    Role role = Role::BAP;
    std::set<std::string> domains;
    std::string endpoint;
    std::string key_id;
    std::string key_algorithm;
    sign::Bytes verification_key;
    std::string region;
    SubscriberStatus status = SubscriberStatus::ACTIVE;
    core::Timestamp valid_from;
    core::Timestamp valid_to;

    bool operator==(const SubscriberRecord&) const = default;
};

// Throws InvalidRecord when structural invariants fail (empty id or
// endpoint, provider with no domains, valid_to before valid_from).
void validate_record(const SubscriberRecord& rec);

core::Payload record_to_json(const SubscriberRecord& rec);
SubscriberRecord record_from_json(const core::Payload& doc);

} // namespace txnet::registry
