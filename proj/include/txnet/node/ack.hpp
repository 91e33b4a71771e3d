// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/payload.hpp"

#include <optional>
#include <string>

namespace txnet::node {

// Frozen receipt error codes. Conformance suites assert on these, so the
// strings are part of the network contract.
inline constexpr const char* kErrDomainNotSupported = "DOMAIN_NOT_SUPPORTED";
inline constexpr const char* kErrSignatureInvalid = "SIGNATURE_INVALID";
inline constexpr const char* kErrTtlExpired = "TTL_EXPIRED";
inline constexpr const char* kErrIllegalState = "ILLEGAL_STATE";
inline constexpr const char* kErrPolicyDenied = "POLICY_DENIED";
// Receipt paths the protocol leaves unnamed; documented repo additions.
inline constexpr const char* kErrMalformedEnvelope = "MALFORMED_ENVELOPE";
inline constexpr const char* kErrNotASearch = "NOT_A_SEARCH";
inline constexpr const char* kErrNotACallback = "NOT_A_CALLBACK";

// Synchronous receipt for a delivered message. The business answer always
// travels later, as an asynchronous callback envelope.
struct Ack
{
    bool ack = true;
    std::optional<std::string> error_code;
    std::optional<std::string> error_message;

    static Ack ok() { return Ack{}; }

    static Ack nack(const std::string& code, const std::string& message)
    {
        Ack a;
        a.ack = false;
        a.error_code = code;
        a.error_message = message;
        return a;
    }

    bool operator==(const Ack&) const = default;
};

inline core::Payload
ack_to_json(const Ack& a)
{
    core::Payload doc = core::Payload::object();
    doc["status"] = a.ack ? "ACK" : "NACK";
    if (!a.ack)
    {
        doc["error"]["code"] = a.error_code.value_or("");
        doc["error"]["message"] = a.error_message.value_or("");
    }
    return doc;
}

inline Ack
ack_from_json(const core::Payload& doc)
{
    Ack a;
    a.ack = doc.value("status", "NACK") == "ACK";
    if (doc.contains("error"))
    {
        a.error_code = doc["error"].value("code", "");
        a.error_message = doc["error"].value("message", "");
    }
    return a;
}

} // namespace txnet::node
