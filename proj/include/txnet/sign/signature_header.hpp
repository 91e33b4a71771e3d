// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/payload.hpp"
#include "txnet/core/time.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace txnet::sign {

using Bytes = std::vector<std::uint8_t>;

// Detached signature metadata carried next to (not inside) the message body,
// so the signature covers the canonical body bytes exactly.
struct SignatureHeader
{
    std::string subscriber_id;
    std::string key_id;
    std::string algorithm;
    core::Timestamp created;
    core::Timestamp expires;
    Bytes digest;    // hash of the canonical envelope body
    Bytes signature; // over the signing base string

    bool operator==(const SignatureHeader&) const = default;
};

core::Payload signature_to_json(const SignatureHeader& h);
SignatureHeader signature_from_json(const core::Payload& doc);

std::string base64_encode(const Bytes& data);
Bytes base64_decode(const std::string& text);

} // namespace txnet::sign
