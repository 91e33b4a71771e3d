// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/registry/record.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace txnet::registry {

struct LookupFilter
{
    std::optional<Role> role;
    std::optional<std::string> domain;
    std::optional<std::string> region;
};

// Trust root of one network. Mutations are serialized behind a mutex and
// recorded on an append-only log; reads work on the in-memory index.
class Registry
{
  public:
    Registry() = default;
    explicit Registry(std::string registry_id)
        : mRegistryId(std::move(registry_id))
    {
    }

    // Registries are shared by reference between nodes; copying one would
    // silently fork the trust root.
    Registry(const Registry&) = delete;
    Registry& operator=(const Registry&) = delete;

    const std::string& registryId() const { return mRegistryId; }

    // Stores a new ACTIVE record. Throws DuplicateSubscriber when the id is
    // taken and InvalidRecord when invariants fail.
    void registerSubscriber(SubscriberRecord record);

    // Suspension takes effect immediately: the record stops appearing in
    // every routing path. Throws UnknownSubscriber.
    void setSubscriberStatus(const std::string& subscriber_id,
                             SubscriberStatus status);

    // Exactly the ACTIVE records matching every provided criterion. Result
    // order is the registry's storage order; fairness is the gateway's job.
    std::vector<SubscriberRecord> lookup(const LookupFilter& filter) const;

    // Full current state, suspended records included. This is the audit and
    // accounting view, not a routing path.
    std::vector<SubscriberRecord> snapshot() const;

    std::optional<SubscriberRecord> find(const std::string& subscriber_id) const;

    // Routing view of one subscriber's verification key: empty for unknown,
    // key-id-mismatched, or suspended subscribers.
    std::optional<sign::Bytes> resolveKey(const std::string& subscriber_id,
                                          const std::string& key_id) const;

    size_t size() const;

    // Newline-delimited canonical records, one per line.
    void loadRecords(const std::string& path);
    void dumpRecords(const std::string& path) const;
    static std::vector<SubscriberRecord> parseRecordLines(const std::string& text);

  private:
    enum class MutationKind
    {
        Register,
        SetStatus,
    };
    struct Mutation
    {
        MutationKind kind;
        SubscriberRecord record; // full record for Register, id+status otherwise
    };

    mutable std::mutex mMutex;
    std::string mRegistryId;
    std::vector<std::string> mOrder; // insertion order of subscriber ids
    std::map<std::string, SubscriberRecord> mIndex;
    std::vector<Mutation> mLog;
};

bool matches_filter(const SubscriberRecord& rec, const LookupFilter& filter);

} // namespace txnet::registry
