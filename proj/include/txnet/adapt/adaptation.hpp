// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/actions.hpp"
#include "txnet/core/payload.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace txnet::adapt {

// Machine-readable per-domain overlay on the core schema: enumerations and
// required fields over core payload paths, plus sanctioned tag namespaces
// for prototyping. Adaptations only constrain payloads; they never extend
// the data model, so the core codec and lifecycle are invariant under them.
struct DomainAdaptation
{
    std::string domain;
    std::string version; // semantic version
    std::map<core::FieldPath, std::set<std::string>> enumerations;
    std::map<std::string, std::vector<core::FieldPath>> required; // per action
    std::set<std::string> tag_namespaces;

    bool operator==(const DomainAdaptation&) const = default;
};

enum class ViolationKind
{
    MISSING_REQUIRED,
    VALUE_NOT_IN_ENUM,
    UNKNOWN_TAG_NAMESPACE, // warning class: never blocks core validity
};

const char* violation_kind_name(ViolationKind k);

struct Violation
{
    std::string path;
    ViolationKind kind;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

// Parses and validates a config in the canonical encoding. Every referenced
// path must be expressible in the core payload model ("tags" is reserved).
// Throws MalformedConfig / UnknownFieldPath.
DomainAdaptation load_adaptation(const std::string& bytes);
DomainAdaptation load_adaptation_file(const std::string& path);
core::Payload adaptation_to_json(const DomainAdaptation& a);

// Deterministic rule check for one (action, payload). Violations come back
// sorted by (path, kind). Unknown actions are not an error here; they simply
// have no required-field rules. Enumeration rules apply whenever the path is
// present.
std::vector<Violation> validate_payload(const DomainAdaptation& a,
                                        const std::string& action,
                                        const core::Payload& payload);

// True when the list has no error-class violations (tag-namespace warnings
// do not block).
bool core_valid(const std::vector<Violation>& violations);

struct CompatReport
{
    bool compatible = true;
    std::vector<std::string> reasons;
};

// Syntactic rule subsumption: every payload valid under `oldA` must stay
// valid under `newA`. Widening (new enum values, fewer required fields, new
// tag namespaces) is compatible; narrowing is breaking. Throws DomainMismatch
// when the two adaptations describe different domains.
CompatReport check_compat(const DomainAdaptation& oldA,
                          const DomainAdaptation& newA);

} // namespace txnet::adapt
