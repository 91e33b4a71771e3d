// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/node/reference.hpp"

namespace txnet::node {

core::Payload
reference_request_payload(const std::string& domain, const std::string& action,
                          const std::string& txn)
{
    using core::Payload;
    Payload p = Payload::object();
    if (action == "search")
    {
        if (domain == "mobility")
        {
            p["intent"]["fulfillment"]["start"]["location"]["gps"] =
                "12.9716,77.5946";
            p["intent"]["fulfillment"]["end"]["location"]["gps"] =
                "12.2958,76.6394";
            p["intent"]["passengers"] = 1;
            p["intent"]["vehicle"]["category"] = "cab";
        }
        else if (domain == "retail")
        {
            p["intent"]["item"]["descriptor"]["name"] = "rice 5kg";
        }
        else if (domain == "energy")
        {
            p["intent"]["fulfillment"]["start"]["location"]["gps"] =
                "12.9716,77.5946";
            p["intent"]["energy"]["kwh"] = 30;
            p["intent"]["source"]["type"] = "renewable";
        }
        else if (domain == "financial-services")
        {
            p["intent"]["product"]["category"] = "credit";
        }
        else
        {
            p["intent"]["descriptor"]["name"] = "anything";
        }
    }
    else if (action == "select")
    {
        p["order"]["items"] = Payload::array({Payload{{"id", "item-1"}}});
    }
    else if (action == "init")
    {
        p["billing"]["name"] = "Reference Buyer";
        if (domain == "retail")
        {
            p["fulfillment"]["type"] = "home-delivery";
        }
        if (domain == "financial-services")
        {
            p["order"]["applicant"]["consent_id"] = "consent-" + txn.substr(0, 8);
            p["order"]["applicant"]["aggregated_transactions_3m"] =
                "orders=1432;value=INR812400";
        }
    }
    else if (action == "confirm")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
    }
    else if (action == "status" || action == "track")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
    }
    else if (action == "cancel")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
        p["cancellation"]["reason"] = "changed-my-mind";
    }
    else if (action == "update")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
        p["order"]["note"] = "updated instructions";
    }
    else if (action == "rating")
    {
        p["rating"]["value"] = "5";
        p["order"]["id"] = "order-" + txn.substr(0, 8);
    }
    else if (action == "support")
    {
        p["support"]["topic"] = "invoice";
        p["order"]["id"] = "order-" + txn.substr(0, 8);
    }
    return p;
}

core::Payload
ReferenceBusiness::operator()(const std::string& action,
                              const core::Envelope& request)
{
    using core::Payload;
    const std::string& txn = request.context.transaction_id;
    const std::string& domain = request.context.domain;
    Payload p = Payload::object();

    if (action == "search")
    {
        auto providers = Payload::array();
        if (!mEmptyCatalog)
        {
            Payload provider = Payload::object();
            provider["id"] = mProviderId;
            provider["items"] =
                Payload::array({Payload{{"id", "item-1"},
                                        {"descriptor", Payload{{"name", "offer"}}},
                                        {"price", Payload{{"value", "100.00"},
                                                          {"currency", "INR"}}}}});
            providers.push_back(provider);
        }
        p["catalog"]["providers"] = providers;
    }
    else if (action == "select")
    {
        p["order"]["items"] = request.message.value("order", Payload::object())
                                  .value("items", Payload::array());
        p["quote"]["price"]["value"] = "100.00";
        p["quote"]["currency"] = "INR";
    }
    else if (action == "init")
    {
        p["terms"]["summary"] = "standard terms, payment on fulfillment";
        if (domain == "financial-services")
        {
            // Credit products collect consented applicant data through an
            // external form and must disclose the comparable yearly cost.
            p["form"]["url"] = "https://forms.example/consent/" + txn.substr(0, 8);
            p["terms"]["apr"] = "18.5%";
        }
    }
    else if (action == "confirm")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
        p["order"]["state"] = "ACTIVE";
    }
    else if (action == "status")
    {
        int polls;
        {
            std::lock_guard lock(mMutex);
            polls = ++mStatusPolls[txn];
        }
        p["order"]["id"] = "order-" + txn.substr(0, 8);
        core::mark_fulfillment_state(
            p, polls >= mCompletesAfter ? "COMPLETED" : "IN_PROGRESS");
    }
    else if (action == "track")
    {
        p["tracking"]["url"] = "https://track.example/" + txn.substr(0, 8);
        p["tracking"]["status"] = "active";
    }
    else if (action == "cancel")
    {
        p["cancellation"]["reason"] = request.message.value(
            "cancellation", Payload::object()).value("reason", "unspecified");
        core::mark_fulfillment_state(p, "CANCELLED");
        p["order"]["id"] = "order-" + txn.substr(0, 8);
    }
    else if (action == "update")
    {
        p["order"]["id"] = "order-" + txn.substr(0, 8);
        p["order"]["state"] = "ACTIVE";
        p["order"]["note"] = "update applied";
    }
    else if (action == "rating")
    {
        p["rating"]["acknowledged"] = true;
    }
    else if (action == "support")
    {
        p["support"]["contact"] = "help@" + mProviderId + ".example";
    }
    return p;
}

} // namespace txnet::node
