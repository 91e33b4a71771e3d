// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace txnet::core {

// Message payloads are attribute-value trees. Domain adaptations constrain
// them with rules but never extend the tree model itself.
using Payload = nlohmann::json;

// Dotted path into a payload object tree, e.g.
// "intent.fulfillment.end.location.gps". Segments never traverse arrays.
struct FieldPath
{
    std::vector<std::string> segments;

    static FieldPath parse(const std::string& dotted);
    std::string str() const;

    bool operator<(const FieldPath& o) const { return segments < o.segments; }
    bool operator==(const FieldPath& o) const = default;
};

// Top-level payload sections the core data model defines. Adaptation rules
// may only reference paths rooted here ("tags" is reserved for the tag
// mechanism and is not rule-addressable).
const std::set<std::string>& payload_roots();

// Object-tree traversal. get returns nullptr when any segment is missing or
// a non-object intervenes.
const Payload* get_path(const Payload& doc, const FieldPath& path);
void set_path(Payload& doc, const FieldPath& path, Payload value);
bool has_path(const Payload& doc, const FieldPath& path);

// Tags: namespaced key-value pairs carried under the reserved "tags" section
// so data not (yet) in any schema can ride along. Nodes forward them
// untouched; upsert overwrites.
struct Tag
{
    std::string ns;
    std::string key;
    std::string value;
};

void upsert_tag(Payload& doc, const Tag& tag);
std::optional<std::string> read_tag(const Payload& doc, const std::string& ns,
                                    const std::string& key);
std::vector<std::string> tag_namespaces_in(const Payload& doc);

// Fulfillment state rides at "fulfillment.state"; COMPLETED closes the
// lifecycle on the status track.
bool fulfillment_complete(const Payload& doc);
void mark_fulfillment_state(Payload& doc, const std::string& state);

// Form links (e.g. a consent form for a credit application) ride at
// "form.url" on terms-negotiation callbacks.
std::optional<std::string> form_link_in(const Payload& doc);

} // namespace txnet::core
