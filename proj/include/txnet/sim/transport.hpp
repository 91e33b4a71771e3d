// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/payload.hpp"
#include "txnet/node/transport.hpp"
#include "txnet/sim/scheduler.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace txnet::sim {

struct LatencySpec
{
    // Fixed when lo == hi, otherwise uniform in [lo, hi] milliseconds.
    core::Millis lo = 10;
    core::Millis hi = 10;
};

struct PartitionWindow
{
    core::Timestamp from;
    core::Timestamp to;
    // Unordered node-id pairs unreachable during the window.
    std::vector<std::pair<std::string, std::string>> pairs;
};

struct TransportConfig
{
    LatencySpec latency;
    double drop_probability = 0.0; // applied per leg
    std::vector<PartitionWindow> partitions;
    std::uint64_t seed = 0;
};

TransportConfig transport_config_from_json(const core::Payload& doc);

// Outcome of one simulated delivery leg.
struct Delivery
{
    enum class Outcome
    {
        Delivered,
        Dropped,
        Partitioned,
    };
    Outcome outcome = Outcome::Delivered;
    core::Timestamp at; // meaningful when Delivered
};

// In-process transport with seeded faults. Synchronous requests run the
// receiver inline (zero-width round trip; retries, backoff and deferred
// deliveries are what move virtual time); one-way posts are scheduled at
// now + latency. Both directions of a request draw drops independently, so
// a receiver can process a message whose receipt the sender never saw —
// that is what makes delivery at-least-once and dedupe load-bearing.
class SimTransport : public node::Transport
{
  public:
    using Endpoint = std::function<node::Ack(const std::string& bytes)>;

    SimTransport(TransportConfig config, Scheduler& scheduler)
        : mConfig(std::move(config))
        , mScheduler(scheduler)
        , mRng(mConfig.seed ^ 0x9e3779b97f4a7c15ULL)
    {
    }

    // Locators are opaque; node ids drive partition matching.
    void bind(const std::string& locator, const std::string& node_id,
              Endpoint endpoint);

    // One delivery leg drawn from the seeded stream.
    Delivery classify(const std::string& from_id, const std::string& to_id,
                      core::Timestamp now);

    node::SendOutcome request(const std::string& from,
                              const std::string& to_locator,
                              const std::string& bytes) override;

    // Fire-and-forget: receiver runs at now + latency when Delivered.
    Delivery post(const std::string& from, const std::string& to_locator,
                  const std::string& bytes);

    // Every byte string handed to an endpoint, in delivery order. Lets tests
    // assert payload immutability through the gateway.
    const std::vector<std::pair<std::string, std::string>>& deliveredBytes() const
    {
        return mDelivered;
    }

  private:
    struct Binding
    {
        std::string node_id;
        Endpoint endpoint;
    };

    bool partitioned(const std::string& a, const std::string& b,
                     core::Timestamp now) const;
    bool drawDrop();
    core::Millis drawLatency();

    TransportConfig mConfig;
    Scheduler& mScheduler;
    std::mutex mMutex;
    std::mt19937_64 mRng;
    std::map<std::string, Binding> mBindings;
    std::vector<std::pair<std::string, std::string>> mDelivered; // (to, bytes)
};

} // namespace txnet::sim
