// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/adapt/adaptation.hpp"
#include "txnet/core/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace txnet::adapt {

const char*
violation_kind_name(ViolationKind k)
{
    switch (k)
    {
    case ViolationKind::MISSING_REQUIRED:
        return "MISSING_REQUIRED";
    case ViolationKind::VALUE_NOT_IN_ENUM:
        return "VALUE_NOT_IN_ENUM";
    case ViolationKind::UNKNOWN_TAG_NAMESPACE:
        return "UNKNOWN_TAG_NAMESPACE";
    }
    return "?";
}

namespace {

core::FieldPath
parse_rule_path(const std::string& dotted)
{
    auto path = core::FieldPath::parse(dotted); // throws UnknownFieldPath
    const std::string& root = path.segments.front();
    if (root == "tags")
    {
        raise(Errc::UnknownFieldPath,
              "rule paths may not target the tag region: '" + dotted + "'");
    }
    if (!core::payload_roots().count(root))
    {
        raise(Errc::UnknownFieldPath,
              "path '" + dotted + "' is outside the core payload model");
    }
    return path;
}

} // namespace

DomainAdaptation
load_adaptation(const std::string& bytes)
{
    auto doc = core::Payload::parse(bytes, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
    {
        raise(Errc::MalformedConfig, "adaptation config is not well-formed");
    }
    if (!doc.contains("domain") || !doc.at("domain").is_string() ||
        !doc.contains("version") || !doc.at("version").is_string())
    {
        raise(Errc::MalformedConfig, "adaptation config needs domain and version");
    }
    DomainAdaptation a;
    a.domain = doc.at("domain").get<std::string>();
    a.version = doc.at("version").get<std::string>();
    if (doc.contains("enumerations"))
    {
        const auto& enums = doc.at("enumerations");
        if (!enums.is_object())
        {
            raise(Errc::MalformedConfig, "enumerations must be an object");
        }
        for (auto it = enums.begin(); it != enums.end(); ++it)
        {
            if (!it.value().is_array() || it.value().empty())
            {
                raise(Errc::MalformedConfig,
                      "enumeration for '" + it.key() + "' must be a non-empty list");
            }
            std::set<std::string> values;
            for (const auto& v : it.value())
            {
                if (!v.is_string())
                {
                    raise(Errc::MalformedConfig, "enumeration values must be strings");
                }
                values.insert(v.get<std::string>());
            }
            a.enumerations.emplace(parse_rule_path(it.key()), std::move(values));
        }
    }
    if (doc.contains("required"))
    {
        const auto& required = doc.at("required");
        if (!required.is_object())
        {
            raise(Errc::MalformedConfig, "required must be an object");
        }
        for (auto it = required.begin(); it != required.end(); ++it)
        {
            if (!core::ActionRegistry::core().isRegistered(it.key()))
            {
                raise(Errc::MalformedConfig,
                      "required rules reference unknown action '" + it.key() + "'");
            }
            if (!it.value().is_array())
            {
                raise(Errc::MalformedConfig, "required paths must be a list");
            }
            std::vector<core::FieldPath> paths;
            for (const auto& p : it.value())
            {
                paths.push_back(parse_rule_path(p.get<std::string>()));
            }
            a.required.emplace(it.key(), std::move(paths));
        }
    }
    if (doc.contains("tag_namespaces"))
    {
        for (const auto& ns : doc.at("tag_namespaces"))
        {
            if (!ns.is_string())
            {
                raise(Errc::MalformedConfig, "tag namespaces must be strings");
            }
            a.tag_namespaces.insert(ns.get<std::string>());
        }
    }
    return a;
}

DomainAdaptation
load_adaptation_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        raise(Errc::IoError, "cannot read adaptation file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_adaptation(buf.str());
}

core::Payload
adaptation_to_json(const DomainAdaptation& a)
{
    core::Payload doc = core::Payload::object();
    doc["domain"] = a.domain;
    doc["version"] = a.version;
    core::Payload enums = core::Payload::object();
    for (const auto& [path, values] : a.enumerations)
    {
        enums[path.str()] = values;
    }
    doc["enumerations"] = enums;
    core::Payload required = core::Payload::object();
    for (const auto& [action, paths] : a.required)
    {
        auto arr = core::Payload::array();
        for (const auto& p : paths)
        {
            arr.push_back(p.str());
        }
        required[action] = arr;
    }
    doc["required"] = required;
    doc["tag_namespaces"] = a.tag_namespaces;
    return doc;
}

std::vector<Violation>
validate_payload(const DomainAdaptation& a, const std::string& action,
                 const core::Payload& payload)
{
    std::vector<Violation> out;

    auto requiredIt = a.required.find(action);
    if (requiredIt != a.required.end())
    {
        for (const auto& path : requiredIt->second)
        {
            if (!core::has_path(payload, path))
            {
                out.push_back({path.str(), ViolationKind::MISSING_REQUIRED,
                               "required for action '" + action + "'"});
            }
        }
    }

    for (const auto& [path, allowed] : a.enumerations)
    {
        const core::Payload* v = core::get_path(payload, path);
        if (!v)
        {
            continue; // presence is the required-field rule's business
        }
        if (!v->is_string() || !allowed.count(v->get<std::string>()))
        {
            std::string got = v->is_string() ? v->get<std::string>() : v->dump();
            out.push_back({path.str(), ViolationKind::VALUE_NOT_IN_ENUM,
                           "value '" + got + "' not allowed"});
        }
    }

    for (const auto& ns : core::tag_namespaces_in(payload))
    {
        if (!a.tag_namespaces.count(ns))
        {
            out.push_back({"tags." + ns, ViolationKind::UNKNOWN_TAG_NAMESPACE,
                           "namespace '" + ns + "' is not listed (warning)"});
        }
    }

    std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
        if (x.path != y.path)
        {
            return x.path < y.path;
        }
        return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    });
    return out;
}

bool
core_valid(const std::vector<Violation>& violations)
{
    for (const auto& v : violations)
    {
        if (v.kind != ViolationKind::UNKNOWN_TAG_NAMESPACE)
        {
            return false;
        }
    }
    return true;
}

CompatReport
check_compat(const DomainAdaptation& oldA, const DomainAdaptation& newA)
{
    if (oldA.domain != newA.domain)
    {
        raise(Errc::DomainMismatch, "cannot compare adaptations for '" +
                                        oldA.domain + "' and '" + newA.domain +
                                        "'");
    }
    CompatReport report;
    auto breaking = [&](std::string reason) {
        report.compatible = false;
        report.reasons.push_back(std::move(reason));
    };

    // New required paths break payloads that never carried them.
    for (const auto& [action, paths] : newA.required)
    {
        auto oldIt = oldA.required.find(action);
        for (const auto& path : paths)
        {
            bool inOld = oldIt != oldA.required.end() &&
                         std::find(oldIt->second.begin(), oldIt->second.end(),
                                   path) != oldIt->second.end();
            if (!inOld)
            {
                breaking("new required field " + path.str() + " for action '" +
                         action + "'");
            }
        }
    }

    // Enumerations may only widen; a fresh enum on a previously free path is
    // a narrowing too.
    for (const auto& [path, newValues] : newA.enumerations)
    {
        auto oldIt = oldA.enumerations.find(path);
        if (oldIt == oldA.enumerations.end())
        {
            breaking("new enumeration restriction on " + path.str());
            continue;
        }
        for (const auto& v : oldIt->second)
        {
            if (!newValues.count(v))
            {
                breaking("enumeration value '" + v + "' removed from " +
                         path.str());
            }
        }
    }

    for (const auto& ns : oldA.tag_namespaces)
    {
        if (!newA.tag_namespaces.count(ns))
        {
            breaking("tag namespace '" + ns + "' removed");
        }
    }
    return report;
}

} // namespace txnet::adapt
