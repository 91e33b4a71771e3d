// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/envelope.hpp"
#include "txnet/core/errors.hpp"

#include <cmath>

namespace txnet::core {

namespace {

void
reject_non_finite(const Payload& doc)
{
    if (doc.is_number_float() && !std::isfinite(doc.get<double>()))
    {
        raise(Errc::MalformedDocument, "non-finite number in payload");
    }
    if (doc.is_object() || doc.is_array())
    {
        for (const auto& item : doc)
        {
            reject_non_finite(item);
        }
    }
}

} // namespace

std::string
canonical_body(const Envelope& e)
{
    reject_non_finite(e.message);
    Payload doc = Payload::object();
    doc["context"] = context_to_json(e.context);
    doc["message"] = e.message;
    return doc.dump();
}

std::string
encode_envelope(const Envelope& e)
{
    reject_non_finite(e.message);
    Payload doc = Payload::object();
    doc["context"] = context_to_json(e.context);
    doc["message"] = e.message;
    if (e.signature)
    {
        doc["signature"] = sign::signature_to_json(*e.signature);
    }
    return doc.dump();
}

Envelope
decode_envelope(const std::string& bytes)
{
    Payload doc = Payload::parse(bytes, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
    {
        raise(Errc::MalformedDocument, "envelope is not a well-formed document");
    }
    auto ctxIt = doc.find("context");
    if (ctxIt == doc.end())
    {
        raise(Errc::MissingContextField, "envelope has no context");
    }
    Envelope e;
    e.context = context_from_json(*ctxIt);
    auto msgIt = doc.find("message");
    if (msgIt == doc.end() || !msgIt->is_object())
    {
        raise(Errc::MalformedDocument, "envelope has no message object");
    }
    e.message = *msgIt;
    auto sigIt = doc.find("signature");
    if (sigIt != doc.end())
    {
        e.signature = sign::signature_from_json(*sigIt);
    }
    return e;
}

} // namespace txnet::core
