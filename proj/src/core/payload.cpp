// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/payload.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::core {

FieldPath
FieldPath::parse(const std::string& dotted)
{
    FieldPath out;
    if (dotted.empty())
    {
        raise(Errc::UnknownFieldPath, "empty field path");
    }
    std::string cur;
    for (char c : dotted)
    {
        if (c == '.')
        {
            if (cur.empty())
            {
                raise(Errc::UnknownFieldPath, "empty segment in '" + dotted + "'");
            }
            out.segments.push_back(cur);
            cur.clear();
        }
        else
        {
            cur += c;
        }
    }
    if (cur.empty())
    {
        raise(Errc::UnknownFieldPath, "empty segment in '" + dotted + "'");
    }
    out.segments.push_back(cur);
    return out;
}

std::string
FieldPath::str() const
{
    std::string out;
    for (size_t i = 0; i < segments.size(); ++i)
    {
        if (i)
        {
            out += '.';
        }
        out += segments[i];
    }
    return out;
}

const std::set<std::string>&
payload_roots()
{
    static const std::set<std::string> kRoots = {
        "intent",     "catalog",  "provider", "items",       "order",
        "quote",      "fulfillment", "billing",  "terms",    "form",
        "cancellation", "tracking", "rating",   "support",   "descriptor",
        "tags",
    };
    return kRoots;
}

const Payload*
get_path(const Payload& doc, const FieldPath& path)
{
    const Payload* cur = &doc;
    for (const auto& seg : path.segments)
    {
        if (!cur->is_object())
        {
            return nullptr;
        }
        auto it = cur->find(seg);
        if (it == cur->end())
        {
            return nullptr;
        }
        cur = &*it;
    }
    return cur;
}

void
set_path(Payload& doc, const FieldPath& path, Payload value)
{
    Payload* cur = &doc;
    for (size_t i = 0; i + 1 < path.segments.size(); ++i)
    {
        Payload& next = (*cur)[path.segments[i]];
        if (!next.is_object())
        {
            next = Payload::object();
        }
        cur = &next;
    }
    (*cur)[path.segments.back()] = std::move(value);
}

bool
has_path(const Payload& doc, const FieldPath& path)
{
    return get_path(doc, path) != nullptr;
}

void
upsert_tag(Payload& doc, const Tag& tag)
{
    doc["tags"][tag.ns][tag.key] = tag.value;
}

std::optional<std::string>
read_tag(const Payload& doc, const std::string& ns, const std::string& key)
{
    auto tags = doc.find("tags");
    if (tags == doc.end() || !tags->is_object())
    {
        return std::nullopt;
    }
    auto nsIt = tags->find(ns);
    if (nsIt == tags->end() || !nsIt->is_object())
    {
        return std::nullopt;
    }
    auto keyIt = nsIt->find(key);
    if (keyIt == nsIt->end() || !keyIt->is_string())
    {
        return std::nullopt;
    }
    return keyIt->get<std::string>();
}

std::vector<std::string>
tag_namespaces_in(const Payload& doc)
{
    std::vector<std::string> out;
    auto tags = doc.find("tags");
    if (tags == doc.end() || !tags->is_object())
    {
        return out;
    }
    for (auto it = tags->begin(); it != tags->end(); ++it)
    {
        out.push_back(it.key());
    }
    return out;
}

bool
fulfillment_complete(const Payload& doc)
{
    static const FieldPath kPath = FieldPath::parse("fulfillment.state");
    const Payload* v = get_path(doc, kPath);
    return v && v->is_string() && v->get<std::string>() == "COMPLETED";
}

void
mark_fulfillment_state(Payload& doc, const std::string& state)
{
    static const FieldPath kPath = FieldPath::parse("fulfillment.state");
    set_path(doc, kPath, state);
}

std::optional<std::string>
form_link_in(const Payload& doc)
{
    static const FieldPath kPath = FieldPath::parse("form.url");
    const Payload* v = get_path(doc, kPath);
    if (v && v->is_string())
    {
        return v->get<std::string>();
    }
    return std::nullopt;
}

} // namespace txnet::core
