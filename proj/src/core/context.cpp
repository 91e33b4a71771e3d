// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/context.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::core {

std::int64_t
default_ttl_seconds(const ActionRegistry& reg, const std::string& action)
{
    std::string request =
        reg.isCallback(action) ? reg.requestForCallback(action) : action;
    return reg.info(request).phase == Phase::Discovery ? 30 : 300;
}

Context
make_context(const ActionRegistry& reg, const std::string& domain,
             const std::string& action, const std::string& bap_id,
             const std::string& bap_uri, const std::string& transaction_id,
             std::int64_t ttl_seconds, Timestamp now, IdGenerator& ids)
{
    if (!reg.isRegistered(action))
    {
        raise(Errc::UnknownAction, "action '" + action + "' is not registered");
    }
    if (ttl_seconds <= 0)
    {
        raise(Errc::NonPositiveTtl,
              "ttl must be positive, got " + std::to_string(ttl_seconds));
    }
    Context ctx;
    ctx.domain = domain;
    ctx.action = action;
    ctx.core_version = kCoreVersion;
    ctx.bap_id = bap_id;
    ctx.bap_uri = bap_uri;
    ctx.transaction_id = transaction_id;
    ctx.message_id = ids.next();
    ctx.timestamp = now;
    ctx.ttl_seconds = ttl_seconds;
    return ctx;
}

Context
make_callback_context(const ActionRegistry& reg, const Context& request,
                      const std::string& bpp_id, const std::string& bpp_uri,
                      Timestamp now, IdGenerator& ids)
{
    std::string callback = reg.pairCallback(request.action);
    Context ctx = request;
    ctx.action = callback;
    ctx.bpp_id = bpp_id;
    ctx.bpp_uri = bpp_uri;
    ctx.message_id = ids.next();
    ctx.timestamp = now;
    ctx.ttl_seconds = default_ttl_seconds(reg, callback);
    return ctx;
}

Payload
context_to_json(const Context& ctx)
{
    Payload doc = Payload::object();
    doc["domain"] = ctx.domain;
    doc["action"] = ctx.action;
    doc["core_version"] = ctx.core_version;
    doc["bap_id"] = ctx.bap_id;
    doc["bap_uri"] = ctx.bap_uri;
    if (ctx.bpp_id)
    {
        doc["bpp_id"] = *ctx.bpp_id;
    }
    if (ctx.bpp_uri)
    {
        doc["bpp_uri"] = *ctx.bpp_uri;
    }
    doc["transaction_id"] = ctx.transaction_id;
    doc["message_id"] = ctx.message_id;
    doc["timestamp"] = to_rfc3339(ctx.timestamp);
    doc["ttl"] = ctx.ttl_seconds;
    return doc;
}

namespace {

std::string
require_string(const Payload& doc, const char* field)
{
    auto it = doc.find(field);
    if (it == doc.end() || !it->is_string())
    {
        raise(Errc::MissingContextField,
              std::string("context field '") + field + "' missing or not a string");
    }
    return it->get<std::string>();
}

} // namespace

Context
context_from_json(const Payload& doc)
{
    if (!doc.is_object())
    {
        raise(Errc::MissingContextField, "context is not an object");
    }
    Context ctx;
    ctx.domain = require_string(doc, "domain");
    ctx.action = require_string(doc, "action");
    ctx.core_version = require_string(doc, "core_version");
    ctx.bap_id = require_string(doc, "bap_id");
    ctx.bap_uri = require_string(doc, "bap_uri");
    if (doc.contains("bpp_id"))
    {
        ctx.bpp_id = require_string(doc, "bpp_id");
    }
    if (doc.contains("bpp_uri"))
    {
        ctx.bpp_uri = require_string(doc, "bpp_uri");
    }
    ctx.transaction_id = require_string(doc, "transaction_id");
    ctx.message_id = require_string(doc, "message_id");
    ctx.timestamp = from_rfc3339(require_string(doc, "timestamp"));
    auto ttl = doc.find("ttl");
    if (ttl == doc.end() || !ttl->is_number_integer())
    {
        raise(Errc::MissingContextField, "context field 'ttl' missing or not an integer");
    }
    ctx.ttl_seconds = ttl->get<std::int64_t>();
    return ctx;
}

} // namespace txnet::core
