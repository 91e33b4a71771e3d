// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/registry/record.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::registry {

const char*
role_name(Role r)
{
    switch (r)
    {
    case Role::BAP:
        return "BAP";
    case Role::BPP:
        return "BPP";
    case Role::BG:
        return "BG";
    case Role::BR:
        return "BR";
    }
    return "?";
}

Role
role_from_name(const std::string& name)
{
    if (name == "BAP")
        return Role::BAP;
    if (name == "BPP")
        return Role::BPP;
    if (name == "BG")
        return Role::BG;
    if (name == "BR")
        return Role::BR;
    raise(Errc::InvalidRecord, "unknown role '" + name + "'");
}

const char*
status_name(SubscriberStatus s)
{
    return s == SubscriberStatus::ACTIVE ? "ACTIVE" : "SUSPENDED";
}

SubscriberStatus
status_from_name(const std::string& name)
{
    if (name == "ACTIVE")
        return SubscriberStatus::ACTIVE;
    if (name == "SUSPENDED")
        return SubscriberStatus::SUSPENDED;
    raise(Errc::InvalidRecord, "unknown status '" + name + "'");
}

void
validate_record(const SubscriberRecord& rec)
{
    if (rec.subscriber_id.empty())
    {
        raise(Errc::InvalidRecord, "subscriber_id is empty");
    }
    if (rec.endpoint.empty())
    {
        raise(Errc::InvalidRecord,
              "record " + rec.subscriber_id + " has no endpoint");
    }
    if (rec.role == Role::BPP && rec.domains.empty())
    {
        // A provider platform must serve at least one domain.
        raise(Errc::InvalidRecord,
              "BPP " + rec.subscriber_id + " declares no domains");
    }
    if (rec.valid_to.ms != 0 && rec.valid_to < rec.valid_from)
    {
        raise(Errc::InvalidRecord,
              "record " + rec.subscriber_id + " has valid_to before valid_from");
    }
}

core::Payload
record_to_json(const SubscriberRecord& rec)
{
    core::Payload doc = core::Payload::object();
    doc["subscriber_id"] = rec.subscriber_id;
    doc["role"] = role_name(rec.role);
    doc["domains"] = rec.domains;
    doc["endpoint"] = rec.endpoint;
    doc["key_id"] = rec.key_id;
    doc["key_algorithm"] = rec.key_algorithm;
    doc["verification_key"] = sign::base64_encode(rec.verification_key);
    doc["region"] = rec.region;
    doc["status"] = status_name(rec.status);
    doc["valid_from"] = core::to_rfc3339(rec.valid_from);
    doc["valid_to"] = core::to_rfc3339(rec.valid_to);
    return doc;
}

SubscriberRecord
record_from_json(const core::Payload& doc)
{
    if (!doc.is_object())
    {
        raise(Errc::InvalidRecord, "record is not an object");
    }
    auto str = [&](const char* field) -> std::string {
        auto it = doc.find(field);
        if (it == doc.end() || !it->is_string())
        {
            raise(Errc::InvalidRecord,
                  std::string("record field '") + field + "' missing");
        }
        return it->get<std::string>();
    };
    SubscriberRecord rec;
    rec.subscriber_id = str("subscriber_id");
    rec.role = role_from_name(str("role"));
    if (doc.contains("domains"))
    {
        if (!doc.at("domains").is_array())
        {
            raise(Errc::InvalidRecord, "record field 'domains' is not a list");
        }
        for (const auto& d : doc.at("domains"))
        {
            if (!d.is_string())
            {
                raise(Errc::InvalidRecord, "domain entries must be strings");
            }
            rec.domains.insert(d.get<std::string>());
        }
    }
    rec.endpoint = str("endpoint");
    rec.key_id = str("key_id");
    rec.key_algorithm = str("key_algorithm");
    rec.verification_key = sign::base64_decode(str("verification_key"));
    rec.region = str("region");
    rec.status = status_from_name(str("status"));
    rec.valid_from = core::from_rfc3339(str("valid_from"));
    rec.valid_to = core::from_rfc3339(str("valid_to"));
    validate_record(rec);
    return rec;
}

} // namespace txnet::registry
