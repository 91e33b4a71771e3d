// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sign/signature_header.hpp"
#include "txnet/core/errors.hpp"

#include <sodium.h>

namespace txnet::sign {

std::string
base64_encode(const Bytes& data)
{
    std::string out;
    out.resize(sodium_base64_encoded_len(data.size(),
                                         sodium_base64_VARIANT_ORIGINAL));
    sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                      sodium_base64_VARIANT_ORIGINAL);
    out.resize(out.find('\0') != std::string::npos ? out.find('\0')
                                                   : out.size());
    return out;
}

Bytes
base64_decode(const std::string& text)
{
    Bytes out(text.size());
    size_t len = 0;
    if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                          nullptr, &len, nullptr,
                          sodium_base64_VARIANT_ORIGINAL) != 0)
    {
        raise(Errc::MalformedDocument, "invalid base64");
    }
    out.resize(len);
    return out;
}

core::Payload
signature_to_json(const SignatureHeader& h)
{
    core::Payload doc = core::Payload::object();
    doc["subscriber_id"] = h.subscriber_id;
    doc["key_id"] = h.key_id;
    doc["algorithm"] = h.algorithm;
    doc["created"] = core::to_rfc3339(h.created);
    doc["expires"] = core::to_rfc3339(h.expires);
    doc["digest"] = base64_encode(h.digest);
    doc["signature"] = base64_encode(h.signature);
    return doc;
}

namespace {

std::string
require_string(const core::Payload& doc, const char* field)
{
    auto it = doc.find(field);
    if (it == doc.end() || !it->is_string())
    {
        raise(Errc::MalformedDocument,
              std::string("signature field '") + field + "' missing");
    }
    return it->get<std::string>();
}

} // namespace

SignatureHeader
signature_from_json(const core::Payload& doc)
{
    if (!doc.is_object())
    {
        raise(Errc::MalformedDocument, "signature is not an object");
    }
    SignatureHeader h;
    h.subscriber_id = require_string(doc, "subscriber_id");
    h.key_id = require_string(doc, "key_id");
    h.algorithm = require_string(doc, "algorithm");
    h.created = core::from_rfc3339(require_string(doc, "created"));
    h.expires = core::from_rfc3339(require_string(doc, "expires"));
    h.digest = base64_decode(require_string(doc, "digest"));
    h.signature = base64_decode(require_string(doc, "signature"));
    return h;
}

} // namespace txnet::sign
