// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sim/transport.hpp"
#include "txnet/core/errors.hpp"

namespace txnet::sim {

TransportConfig
transport_config_from_json(const core::Payload& doc)
{
    TransportConfig cfg;
    if (doc.contains("latency_ms"))
    {
        const auto& lat = doc.at("latency_ms");
        if (lat.is_number_integer())
        {
            cfg.latency.lo = cfg.latency.hi = lat.get<core::Millis>();
        }
        else if (lat.is_array() && lat.size() == 2)
        {
            cfg.latency.lo = lat[0].get<core::Millis>();
            cfg.latency.hi = lat[1].get<core::Millis>();
        }
        else
        {
            raise(Errc::ScenarioConfigError,
                  "latency_ms must be an integer or [lo, hi]");
        }
    }
    cfg.drop_probability = doc.value("drop_probability", 0.0);
    if (cfg.drop_probability < 0.0 || cfg.drop_probability >= 1.0)
    {
        raise(Errc::ScenarioConfigError, "drop_probability must be in [0, 1)");
    }
    if (doc.contains("partitions"))
    {
        for (const auto& w : doc.at("partitions"))
        {
            PartitionWindow window;
            window.from = core::Timestamp{w.at("from_ms").get<std::int64_t>()};
            window.to = core::Timestamp{w.at("to_ms").get<std::int64_t>()};
            for (const auto& pair : w.at("pairs"))
            {
                window.pairs.emplace_back(pair[0].get<std::string>(),
                                          pair[1].get<std::string>());
            }
            cfg.partitions.push_back(std::move(window));
        }
    }
    cfg.seed = doc.value("seed", std::uint64_t{0});
    return cfg;
}

void
SimTransport::bind(const std::string& locator, const std::string& node_id,
                   Endpoint endpoint)
{
    std::lock_guard lock(mMutex);
    mBindings[locator] = Binding{node_id, std::move(endpoint)};
}

bool
SimTransport::partitioned(const std::string& a, const std::string& b,
                          core::Timestamp now) const
{
    for (const auto& window : mConfig.partitions)
    {
        if (now < window.from || now > window.to)
        {
            continue;
        }
        for (const auto& [x, y] : window.pairs)
        {
            if ((x == a && y == b) || (x == b && y == a))
            {
                return true;
            }
        }
    }
    return false;
}

bool
SimTransport::drawDrop()
{
    if (mConfig.drop_probability <= 0.0)
    {
        return false;
    }
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(mRng) < mConfig.drop_probability;
}

core::Millis
SimTransport::drawLatency()
{
    if (mConfig.latency.lo >= mConfig.latency.hi)
    {
        return mConfig.latency.lo;
    }
    std::uniform_int_distribution<core::Millis> d(mConfig.latency.lo,
                                                  mConfig.latency.hi);
    return d(mRng);
}

Delivery
SimTransport::classify(const std::string& from_id, const std::string& to_id,
                       core::Timestamp now)
{
    std::lock_guard lock(mMutex);
    if (partitioned(from_id, to_id, now))
    {
        return {Delivery::Outcome::Partitioned, now};
    }
    if (drawDrop())
    {
        return {Delivery::Outcome::Dropped, now};
    }
    return {Delivery::Outcome::Delivered, now + drawLatency()};
}

node::SendOutcome
SimTransport::request(const std::string& from, const std::string& to_locator,
                      const std::string& bytes)
{
    core::Timestamp now = mScheduler.now();
    Binding binding;
    {
        std::lock_guard lock(mMutex);
        auto it = mBindings.find(to_locator);
        if (it == mBindings.end())
        {
            return node::SendOutcome::no_route();
        }
        binding = it->second;
        if (partitioned(from, binding.node_id, now))
        {
            return node::SendOutcome::partitioned();
        }
        if (drawDrop()) // request leg lost: receiver never sees it
        {
            return node::SendOutcome::dropped();
        }
        mDelivered.emplace_back(binding.node_id, bytes);
    }
    node::Ack ack = binding.endpoint(bytes);
    {
        std::lock_guard lock(mMutex);
        if (drawDrop()) // receipt leg lost: effects happened, sender retries
        {
            return node::SendOutcome::dropped();
        }
    }
    return node::SendOutcome::acked(std::move(ack));
}

Delivery
SimTransport::post(const std::string& from, const std::string& to_locator,
                   const std::string& bytes)
{
    core::Timestamp now = mScheduler.now();
    Binding binding;
    Delivery outcome;
    {
        std::lock_guard lock(mMutex);
        auto it = mBindings.find(to_locator);
        if (it == mBindings.end())
        {
            return {Delivery::Outcome::Dropped, now};
        }
        binding = it->second;
        if (partitioned(from, binding.node_id, now))
        {
            return {Delivery::Outcome::Partitioned, now};
        }
        if (drawDrop())
        {
            return {Delivery::Outcome::Dropped, now};
        }
        outcome = {Delivery::Outcome::Delivered, now + drawLatency()};
        mDelivered.emplace_back(binding.node_id, bytes);
    }
    mScheduler.scheduleAt(outcome.at,
                          [endpoint = binding.endpoint, bytes] {
                              (void)endpoint(bytes);
                          });
    return outcome;
}

} // namespace txnet::sim
