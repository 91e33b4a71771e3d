// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sim/scenario.hpp"
#include "txnet/core/errors.hpp"

#include <fstream>
#include <sstream>

namespace txnet::sim {

namespace {

NodeSpec
node_spec_from_json(const core::Payload& doc)
{
    NodeSpec spec;
    spec.subscriber_id = doc.at("subscriber_id").get<std::string>();
    spec.role = registry::role_from_name(doc.at("role").get<std::string>());
    if (doc.contains("domains"))
    {
        for (const auto& d : doc.at("domains"))
        {
            spec.domains.insert(d.get<std::string>());
        }
    }
    spec.locator = doc.value("locator", "mem://" + spec.subscriber_id);
    spec.region = doc.value("region", "IN");
    if (doc.contains("key_seed"))
    {
        spec.key_seed = doc.at("key_seed").get<std::uint64_t>();
    }
    if (doc.contains("behavior"))
    {
        const auto& b = doc.at("behavior");
        spec.profile = b.value("profile", "reference");
        spec.status_completes_after = b.value("status_completes_after", 1);
    }
    if (doc.contains("retry"))
    {
        spec.retry.max_attempts = doc.at("retry").value("max_attempts", 5);
        spec.retry.backoff_base =
            doc.at("retry").value("backoff_base_ms", core::Millis{100});
    }
    return spec;
}

} // namespace

Scenario
scenario_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("networks"))
    {
        raise(Errc::ScenarioConfigError, "scenario needs a networks list");
    }
    Scenario s;
    s.name = doc.value("name", "unnamed");
    s.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("transport"))
    {
        s.transport = transport_config_from_json(doc.at("transport"));
    }
    if (s.transport.seed == 0)
    {
        s.transport.seed = s.seed;
    }
    if (doc.contains("adaptations"))
    {
        for (auto it = doc.at("adaptations").begin();
             it != doc.at("adaptations").end(); ++it)
        {
            s.adaptation_files[it.key()] = it.value().get<std::string>();
        }
    }
    for (const auto& net : doc.at("networks"))
    {
        NetworkSpec network;
        network.registry_id = net.at("registry_id").get<std::string>();
        network.registry_locator =
            net.value("registry_locator", "mem://" + network.registry_id);
        if (net.contains("gateway"))
        {
            const auto& gw = net.at("gateway");
            GatewaySpec spec;
            spec.subscriber_id = gw.at("subscriber_id").get<std::string>();
            spec.locator = gw.value("locator", "mem://" + spec.subscriber_id);
            spec.fairness_seed = gw.value("fairness_seed", std::uint64_t{0});
            if (gw.contains("policies"))
            {
                for (const auto& p : gw.at("policies"))
                {
                    spec.policy_files.push_back(p.get<std::string>());
                }
            }
            if (gw.contains("key_seed"))
            {
                spec.key_seed = gw.at("key_seed").get<std::uint64_t>();
            }
            network.gateway = std::move(spec);
        }
        if (net.contains("nodes"))
        {
            for (const auto& n : net.at("nodes"))
            {
                network.nodes.push_back(node_spec_from_json(n));
            }
        }
        s.networks.push_back(std::move(network));
    }
    if (doc.contains("root_registry"))
    {
        s.root_registry_id =
            doc.at("root_registry").value("registry_id", "root");
        s.root_locator = doc.at("root_registry").value("locator", "mem://root");
    }
    if (doc.contains("trust"))
    {
        for (const auto& pair : doc.at("trust"))
        {
            s.trust.emplace_back(pair[0].get<std::string>(),
                                 pair[1].get<std::string>());
        }
    }
    if (doc.contains("flows"))
    {
        for (const auto& f : doc.at("flows"))
        {
            FlowSpec flow;
            flow.flow_id = f.at("flow_id").get<std::string>();
            flow.bap = f.at("bap").get<std::string>();
            flow.domain = f.at("domain").get<std::string>();
            flow.count = f.value("count", 1);
            flow.start_ms = f.value("start_ms", core::Millis{0});
            flow.interval_ms = f.value("interval_ms", core::Millis{100});
            flow.discovery = f.value("discovery", "gateway");
            flow.conclude = f.value("conclude", "complete");
            flow.think_ms = f.value("think_ms", core::Millis{10});
            flow.status_poll_ms = f.value("status_poll_ms", core::Millis{500});
            if (flow.count < 1)
            {
                raise(Errc::ScenarioConfigError,
                      "flow " + flow.flow_id + " has count < 1");
            }
            s.flows.push_back(std::move(flow));
        }
    }
    if (doc.contains("governance"))
    {
        for (const auto& g : doc.at("governance"))
        {
            GovernanceStep step;
            step.at_ms = g.at("at_ms").get<core::Millis>();
            if (g.contains("thresholds"))
            {
                step.thresholds.min_search_volume =
                    g.at("thresholds").value("min_search_volume", 100);
                step.thresholds.max_search_to_order_ratio =
                    g.at("thresholds").value("max_search_to_order_ratio", 50.0);
            }
            s.governance.push_back(step);
        }
    }
    if (doc.contains("assertions"))
    {
        for (const auto& a : doc.at("assertions"))
        {
            AssertionSpec spec;
            spec.kind = a.at("kind").get<std::string>();
            spec.params = a;
            s.assertions.push_back(std::move(spec));
        }
    }
    return s;
}

Scenario
load_scenario_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        raise(Errc::IoError, "cannot read scenario file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = core::Payload::parse(buf.str(), nullptr, false);
    if (doc.is_discarded())
    {
        raise(Errc::ScenarioConfigError,
              "scenario file is not well-formed: " + path);
    }
    try
    {
        return scenario_from_json(doc);
    }
    catch (const core::Payload::exception& e)
    {
        raise(Errc::ScenarioConfigError, std::string(e.what()) + " in " + path);
    }
}

std::string
component_config_bytes(const core::Payload& doc, const std::string& component_id)
{
    if (doc.contains("networks"))
    {
        for (const auto& net : doc.at("networks"))
        {
            if (net.value("registry_id", "") == component_id)
            {
                return net.dump();
            }
            if (net.contains("gateway") &&
                net.at("gateway").value("subscriber_id", "") == component_id)
            {
                return net.at("gateway").dump();
            }
            if (net.contains("nodes"))
            {
                for (const auto& n : net.at("nodes"))
                {
                    if (n.value("subscriber_id", "") == component_id)
                    {
                        return n.dump();
                    }
                }
            }
        }
    }
    raise(Errc::ScenarioConfigError,
          "component '" + component_id + "' not found in scenario");
}

} // namespace txnet::sim
