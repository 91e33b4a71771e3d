// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/gateway/policy.hpp"
#include "txnet/core/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace txnet::gateway {

namespace {

// Envelope view predicates evaluate against: context fields plus message.
core::Payload
envelope_view(const core::Envelope& e)
{
    core::Payload doc = core::Payload::object();
    doc["context"] = core::context_to_json(e.context);
    doc["message"] = e.message;
    return doc;
}

bool
region_within(const std::string& value, const std::string& region)
{
    if (value == region)
    {
        return true;
    }
    return value.size() > region.size() &&
           value.compare(0, region.size(), region) == 0 &&
           value[region.size()] == '/';
}

} // namespace

bool
Predicate::matches(const core::Payload& doc) const
{
    const core::Payload* v = core::get_path(doc, path);
    if (!v || !v->is_string())
    {
        return false;
    }
    const std::string& s = v->get_ref<const std::string&>();
    switch (op)
    {
    case Op::Equals:
        return !values.empty() && s == values.front();
    case Op::InSet:
        for (const auto& candidate : values)
        {
            if (s == candidate)
            {
                return true;
            }
        }
        return false;
    case Op::RegionWithin:
        return !values.empty() && region_within(s, values.front());
    }
    return false;
}

PolicyVerdict
evaluate_policy(const Policy& p, const core::Envelope& e)
{
    if (p.scope_domain && e.context.domain != *p.scope_domain)
    {
        return PolicyVerdict::allowed();
    }
    if (p.scope_action && e.context.action != *p.scope_action)
    {
        return PolicyVerdict::allowed();
    }
    core::Payload view = envelope_view(e);
    for (const auto& rule : p.rules)
    {
        if (!rule.match.matches(view))
        {
            continue;
        }
        if (rule.effect == Rule::Effect::ALLOW)
        {
            return PolicyVerdict::allowed();
        }
        for (const auto& exception : rule.exceptions)
        {
            if (exception.matches(view))
            {
                return PolicyVerdict::allowed();
            }
        }
        return PolicyVerdict::denied(p.policy_id);
    }
    return PolicyVerdict::allowed();
}

PolicyVerdict
evaluate_policies(const std::vector<Policy>& ps, const core::Envelope& e)
{
    for (const auto& p : ps)
    {
        auto verdict = evaluate_policy(p, e);
        if (!verdict.allow)
        {
            return verdict;
        }
    }
    return PolicyVerdict::allowed();
}

namespace {

core::FieldPath
parse_envelope_path(const std::string& dotted)
{
    core::FieldPath path;
    try
    {
        path = core::FieldPath::parse(dotted);
    }
    catch (const Error&)
    {
        raise(Errc::MalformedPolicy, "bad predicate path '" + dotted + "'");
    }
    const std::string& root = path.segments.front();
    if (root != "context" && root != "message")
    {
        raise(Errc::MalformedPolicy,
              "predicate path must be rooted at context or message, got '" +
                  dotted + "'");
    }
    return path;
}

Predicate
predicate_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("path") || !doc.contains("op"))
    {
        raise(Errc::MalformedPolicy, "predicate needs path and op");
    }
    Predicate pred;
    pred.path = parse_envelope_path(doc.at("path").get<std::string>());
    std::string op = doc.at("op").get<std::string>();
    if (op == "equals")
    {
        pred.op = Predicate::Op::Equals;
    }
    else if (op == "in_set")
    {
        pred.op = Predicate::Op::InSet;
    }
    else if (op == "region_within")
    {
        pred.op = Predicate::Op::RegionWithin;
    }
    else
    {
        raise(Errc::MalformedPolicy, "unknown predicate op '" + op + "'");
    }
    if (pred.op == Predicate::Op::InSet)
    {
        if (!doc.contains("values") || !doc.at("values").is_array())
        {
            raise(Errc::MalformedPolicy, "in_set predicate needs values");
        }
        for (const auto& v : doc.at("values"))
        {
            pred.values.push_back(v.get<std::string>());
        }
    }
    else
    {
        if (!doc.contains("value") || !doc.at("value").is_string())
        {
            raise(Errc::MalformedPolicy, "predicate needs a string value");
        }
        pred.values.push_back(doc.at("value").get<std::string>());
    }
    return pred;
}

core::Payload
predicate_to_json(const Predicate& pred)
{
    core::Payload doc = core::Payload::object();
    doc["path"] = pred.path.str();
    switch (pred.op)
    {
    case Predicate::Op::Equals:
        doc["op"] = "equals";
        doc["value"] = pred.values.front();
        break;
    case Predicate::Op::InSet:
        doc["op"] = "in_set";
        doc["values"] = pred.values;
        break;
    case Predicate::Op::RegionWithin:
        doc["op"] = "region_within";
        doc["value"] = pred.values.front();
        break;
    }
    return doc;
}

} // namespace

Policy
policy_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("policy_id") || !doc.contains("rules"))
    {
        raise(Errc::MalformedPolicy, "policy needs policy_id and rules");
    }
    Policy p;
    p.policy_id = doc.at("policy_id").get<std::string>();
    if (doc.contains("scope"))
    {
        const auto& scope = doc.at("scope");
        if (scope.contains("domain"))
        {
            p.scope_domain = scope.at("domain").get<std::string>();
        }
        if (scope.contains("action"))
        {
            p.scope_action = scope.at("action").get<std::string>();
        }
    }
    if (!doc.at("rules").is_array())
    {
        raise(Errc::MalformedPolicy, "rules must be a list");
    }
    for (const auto& r : doc.at("rules"))
    {
        Rule rule;
        if (!r.contains("match") || !r.contains("effect"))
        {
            raise(Errc::MalformedPolicy, "rule needs match and effect");
        }
        rule.match = predicate_from_json(r.at("match"));
        std::string effect = r.at("effect").get<std::string>();
        if (effect == "ALLOW")
        {
            rule.effect = Rule::Effect::ALLOW;
        }
        else if (effect == "DENY")
        {
            rule.effect = Rule::Effect::DENY;
        }
        else
        {
            raise(Errc::MalformedPolicy, "unknown effect '" + effect + "'");
        }
        if (r.contains("exceptions"))
        {
            for (const auto& ex : r.at("exceptions"))
            {
                rule.exceptions.push_back(predicate_from_json(ex));
            }
        }
        p.rules.push_back(std::move(rule));
    }
    return p;
}

core::Payload
policy_to_json(const Policy& p)
{
    core::Payload doc = core::Payload::object();
    doc["policy_id"] = p.policy_id;
    if (p.scope_domain || p.scope_action)
    {
        core::Payload scope = core::Payload::object();
        if (p.scope_domain)
        {
            scope["domain"] = *p.scope_domain;
        }
        if (p.scope_action)
        {
            scope["action"] = *p.scope_action;
        }
        doc["scope"] = scope;
    }
    auto rules = core::Payload::array();
    for (const auto& rule : p.rules)
    {
        core::Payload r = core::Payload::object();
        r["match"] = predicate_to_json(rule.match);
        r["effect"] = rule.effect == Rule::Effect::ALLOW ? "ALLOW" : "DENY";
        if (!rule.exceptions.empty())
        {
            auto exceptions = core::Payload::array();
            for (const auto& ex : rule.exceptions)
            {
                exceptions.push_back(predicate_to_json(ex));
            }
            r["exceptions"] = exceptions;
        }
        rules.push_back(r);
    }
    doc["rules"] = rules;
    return doc;
}

Policy
load_policy_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        raise(Errc::IoError, "cannot read policy file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = core::Payload::parse(buf.str(), nullptr, false);
    if (doc.is_discarded())
    {
        raise(Errc::MalformedPolicy, "policy file is not well-formed: " + path);
    }
    return policy_from_json(doc);
}

std::vector<Policy>
load_policy_dir(const std::string& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
    {
        if (entry.path().extension() == ".json")
        {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<Policy> out;
    for (const auto& f : files)
    {
        out.push_back(load_policy_file(f.string()));
    }
    return out;
}

} // namespace txnet::gateway
