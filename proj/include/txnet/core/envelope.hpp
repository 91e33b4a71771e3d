// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/context.hpp"
#include "txnet/core/payload.hpp"
#include "txnet/sign/signature_header.hpp"

#include <optional>
#include <string>

namespace txnet::core {

// One protocol message: context header, payload document, and an optional
// detached signature.
struct Envelope
{
    Context context;
    Payload message = Payload::object();
    std::optional<sign::SignatureHeader> signature;

    bool operator==(const Envelope&) const = default;
};

// Canonical wire form: UTF-8 JSON with lexicographically sorted keys and no
// insignificant whitespace. The signature, when present, rides under the
// top-level "signature" key; the signed region is exactly canonical_body().
//
// encode throws MalformedDocument when the payload contains non-finite
// numbers (they have no canonical rendering).
std::string encode_envelope(const Envelope& e);

// The byte region signatures and digests cover: {"context":...,"message":...}.
std::string canonical_body(const Envelope& e);

// Throws MalformedDocument on unparseable input and MissingContextField when
// required context fields are absent.
Envelope decode_envelope(const std::string& bytes);

} // namespace txnet::core
