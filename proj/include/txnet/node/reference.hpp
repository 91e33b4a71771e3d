// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/envelope.hpp"
#include "txnet/node/node.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace txnet::node {

// Request payloads the reference consumer sends, shaped to satisfy the
// shipped domain adaptations (mobility, retail, energy, financial-services).
core::Payload reference_request_payload(const std::string& domain,
                                        const std::string& action,
                                        const std::string& txn);

// Reference provider logic: answers every interaction with a payload that
// validates under the shipped adaptation of its domain. Stateless except for
// the status track, which reports IN_PROGRESS until `completes_after` polls
// have arrived for a transaction and COMPLETED afterwards.
class ReferenceBusiness
{
  public:
    explicit ReferenceBusiness(std::string provider_id, int completes_after = 1,
                               bool empty_catalog = false)
        : mProviderId(std::move(provider_id))
        , mCompletesAfter(completes_after)
        , mEmptyCatalog(empty_catalog)
    {
    }

    core::Payload operator()(const std::string& action,
                             const core::Envelope& request);

    static BusinessHook make(std::string provider_id, int completes_after = 1,
                             bool empty_catalog = false)
    {
        auto self = std::make_shared<ReferenceBusiness>(
            std::move(provider_id), completes_after, empty_catalog);
        return [self](const std::string& action, const core::Envelope& request) {
            return (*self)(action, request);
        };
    }

  private:
    std::string mProviderId;
    int mCompletesAfter;
    bool mEmptyCatalog; // a provider that lists nothing (scraper profile)
    std::mutex mMutex;
    std::map<std::string, int> mStatusPolls;
};

} // namespace txnet::node
