// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sim/runner.hpp"
#include "txnet/core/errors.hpp"
#include "txnet/gateway/gateway.hpp"
#include "txnet/node/reference.hpp"
#include "txnet/registry/discovery.hpp"
#include "txnet/sim/scheduler.hpp"

#include <algorithm>
#include <set>

namespace txnet::sim {

namespace {

std::uint64_t
mix_seed(std::uint64_t seed, const std::string& salt)
{
    std::uint64_t h = seed ^ 14695981039346656037ULL;
    for (unsigned char c : salt)
    {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct NetworkRuntime
{
    NetworkSpec spec;
    std::unique_ptr<registry::Registry> reg;
    std::unique_ptr<gateway::Gateway> gw;
    std::string gw_id;
    std::string gw_locator;
};

struct FlowInstance
{
    std::string id;
    const FlowSpec* spec = nullptr;
    std::string txn;
    enum class St
    {
        Running,
        Completed,
        Cancelled,
        Aborted,
    } st = St::Running;
    std::string abort_reason;
    bool selected = false;
    node::RequestTarget order_target; // chosen provider, post-discovery
    std::string awaiting;             // callback the flow is blocked on
    int searches_unresolved = 0;
    int searches_acked = 0;
};

struct World
{
    const Scenario* scenario = nullptr;
    RunOptions opts;
    Scheduler scheduler;
    std::unique_ptr<SimTransport> transport;
    node::EventLog log;
    registry::TrustTable trust;
    std::vector<std::unique_ptr<NetworkRuntime>> networks;
    std::map<std::string, std::unique_ptr<node::BapNode>> baps;
    std::map<std::string, std::unique_ptr<node::BppNode>> bpps;
    std::map<std::string, std::string> home_registry; // subscriber -> registry
    registry::RegistryGraph root_graph;
    std::map<std::string, adapt::DomainAdaptation> adaptations;

    std::vector<std::unique_ptr<FlowInstance>> instances;
    std::map<std::string, FlowInstance*> by_txn;

    registry::GraphFetcher fetcher() const
    {
        return [this](const std::string& locator)
                   -> std::optional<registry::RegistryGraph> {
            if (locator == scenario->root_locator)
            {
                return root_graph;
            }
            for (const auto& net : networks)
            {
                if (net->spec.registry_locator == locator)
                {
                    registry::RegistryGraph g;
                    g.registry_id = net->spec.registry_id;
                    g.records = net->reg->snapshot();
                    return g;
                }
            }
            return std::nullopt;
        };
    }

    sign::KeyResolver resolver() const
    {
        return [this](const std::string& sid, const std::string& kid)
                   -> std::optional<sign::Bytes> {
            for (const auto& net : networks)
            {
                if (auto key = net->reg->resolveKey(sid, kid))
                {
                    return key;
                }
            }
            return std::nullopt;
        };
    }

    NetworkRuntime* networkOf(const std::string& registry_id)
    {
        for (auto& net : networks)
        {
            if (net->spec.registry_id == registry_id)
            {
                return net.get();
            }
        }
        return nullptr;
    }
};

registry::SubscriberRecord
record_for(const std::string& id, registry::Role role,
           const std::set<std::string>& domains, const std::string& locator,
           const std::string& region, const sign::KeyPair& kp)
{
    registry::SubscriberRecord rec;
    rec.subscriber_id = id;
    rec.role = role;
    rec.domains = domains;
    rec.endpoint = locator;
    rec.key_id = kp.key_id;
    rec.key_algorithm = kp.algorithm;
    rec.verification_key = kp.verification_key;
    rec.region = region;
    rec.valid_from = core::Timestamp{0};
    rec.valid_to = core::Timestamp{4102444800000};
    return rec;
}

void
build_world(World& world)
{
    const Scenario& s = *world.scenario;
    TransportConfig tcfg = s.transport;
    if (world.opts.seed_override)
    {
        tcfg.seed = *world.opts.seed_override;
    }
    world.transport = std::make_unique<SimTransport>(tcfg, world.scheduler);

    for (const auto& [domain, file] : s.adaptation_files)
    {
        world.adaptations.emplace(
            domain, adapt::load_adaptation_file(world.opts.data_dir + "/" + file));
    }

    auto resolver = world.resolver();

    // Registries, gateways, nodes.
    for (const auto& netSpec : s.networks)
    {
        auto net = std::make_unique<NetworkRuntime>();
        net->spec = netSpec;
        net->reg = std::make_unique<registry::Registry>(netSpec.registry_id);

        if (netSpec.gateway)
        {
            const auto& gwSpec = *netSpec.gateway;
            auto gwKey = sign::generate_keypair(
                sign::kAlgEd25519,
                gwSpec.key_seed.value_or(mix_seed(s.seed, gwSpec.subscriber_id)));
            net->gw_id = gwSpec.subscriber_id;
            net->gw_locator = gwSpec.locator;
            net->reg->registerSubscriber(
                record_for(gwSpec.subscriber_id, registry::Role::BG, {},
                           gwSpec.locator, "IN", gwKey));
            std::vector<gateway::Policy> policies;
            for (const auto& file : gwSpec.policy_files)
            {
                policies.push_back(
                    gateway::load_policy_file(world.opts.data_dir + "/" + file));
            }
            net->gw = std::make_unique<gateway::Gateway>(
                gateway::GatewayConfig{gwSpec.subscriber_id,
                                       gwSpec.fairness_seed},
                *net->reg, std::move(policies));
        }

        for (const auto& nodeSpec : netSpec.nodes)
        {
            node::NodeConfig cfg;
            cfg.subscriber_id = nodeSpec.subscriber_id;
            cfg.role = nodeSpec.role;
            cfg.supported_domains = nodeSpec.domains;
            cfg.keypair = sign::generate_keypair(
                sign::kAlgEd25519,
                nodeSpec.key_seed.value_or(
                    mix_seed(s.seed, nodeSpec.subscriber_id)));
            cfg.locator = nodeSpec.locator;
            cfg.home_registry_id = netSpec.registry_id;
            cfg.retry = nodeSpec.retry;
            net->reg->registerSubscriber(
                record_for(nodeSpec.subscriber_id, nodeSpec.role,
                           nodeSpec.domains, nodeSpec.locator, nodeSpec.region,
                           cfg.keypair));
            world.home_registry[nodeSpec.subscriber_id] = netSpec.registry_id;

            std::uint64_t idSeed = mix_seed(s.seed, "ids:" + nodeSpec.subscriber_id);
            if (nodeSpec.role == registry::Role::BAP)
            {
                auto bap = std::make_unique<node::BapNode>(
                    cfg, *world.transport, world.scheduler, resolver, world.log,
                    idSeed);
                bap->setTrustContext(&world.trust,
                                     [&world](const std::string& bpp_id) {
                                         auto it =
                                             world.home_registry.find(bpp_id);
                                         return it == world.home_registry.end()
                                                    ? std::string()
                                                    : it->second;
                                     });
                world.transport->bind(cfg.locator, cfg.subscriber_id,
                                      [node = bap.get()](const std::string& b) {
                                          return node->handleDelivery(b);
                                      });
                world.baps.emplace(nodeSpec.subscriber_id, std::move(bap));
            }
            else if (nodeSpec.role == registry::Role::BPP)
            {
                auto business = node::ReferenceBusiness::make(
                    nodeSpec.subscriber_id, nodeSpec.status_completes_after,
                    nodeSpec.profile == "scraper");
                auto bpp = std::make_unique<node::BppNode>(
                    cfg, *world.transport, world.scheduler, resolver, world.log,
                    std::move(business), idSeed);
                world.transport->bind(cfg.locator, cfg.subscriber_id,
                                      [node = bpp.get()](const std::string& b) {
                                          return node->handleDelivery(b);
                                      });
                world.bpps.emplace(nodeSpec.subscriber_id, std::move(bpp));
            }
            else
            {
                raise(Errc::ScenarioConfigError,
                      "scenario nodes must be BAP or BPP, got " +
                          std::string(registry::role_name(nodeSpec.role)));
            }
        }
        world.networks.push_back(std::move(net));
    }

    // Gateways bind after all registries exist (their resolver spans them).
    for (auto& net : world.networks)
    {
        if (!net->gw)
        {
            continue;
        }
        auto* netPtr = net.get();
        auto* worldPtr = &world;
        world.transport->bind(
            net->gw_locator, net->gw_id,
            [netPtr, worldPtr, resolver](const std::string& bytes) {
                core::Timestamp now = worldPtr->scheduler.now();
                std::string txn = "?";
                try
                {
                    txn = core::decode_envelope(bytes).context.transaction_id;
                }
                catch (const Error&)
                {
                }
                auto deliver = [&](const registry::SubscriberRecord& rec,
                                   const std::string& b) {
                    auto outcome =
                        worldPtr->transport->post(netPtr->gw_id, rec.endpoint, b);
                    const char* verdict =
                        outcome.outcome == Delivery::Outcome::Delivered
                            ? "DELIVERED"
                            : (outcome.outcome == Delivery::Outcome::Dropped
                                   ? "DROPPED"
                                   : "PARTITIONED");
                    worldPtr->log.append({now, netPtr->gw_id, "SEND", "search",
                                          txn, verdict});
                    return outcome.outcome == Delivery::Outcome::Delivered;
                };
                auto [ack, report] =
                    netPtr->gw->handleSearch(bytes, resolver, now, deliver);
                worldPtr->log.append(
                    {now, netPtr->gw_id, "RECV", "search", txn,
                     ack.ack ? "ACK" : "NACK:" + ack.error_code.value_or("")});
                return ack;
            });
    }

    // Root registry graph: one self-entry per network, contributed by the
    // network itself, so adding a network never edits existing entries.
    world.root_graph.registry_id = s.root_registry_id;
    for (const auto& net : world.networks)
    {
        world.root_graph.peers.emplace_back(net->spec.registry_id,
                                            net->spec.registry_locator);
    }

    for (const auto& [a, b] : s.trust)
    {
        world.trust.assertTrust(a, b);
    }
}

// ---------------------------------------------------------------------------
// Flow engine

class FlowEngine
{
  public:
    explicit FlowEngine(World& world) : mWorld(world) {}

    void scheduleAll()
    {
        for (const auto& flow : mWorld.scenario->flows)
        {
            for (int k = 0; k < flow.count; ++k)
            {
                auto inst = std::make_unique<FlowInstance>();
                inst->id = flow.flow_id + "#" + std::to_string(k);
                inst->spec = &flow;
                FlowInstance* ptr = inst.get();
                mWorld.instances.push_back(std::move(inst));
                mWorld.scheduler.scheduleAt(
                    core::Timestamp{flow.start_ms + k * flow.interval_ms},
                    [this, ptr] { start(*ptr); });
            }
        }
        installHooks();
    }

  private:
    node::BapNode& bapOf(const FlowInstance& inst)
    {
        auto it = mWorld.baps.find(inst.spec->bap);
        if (it == mWorld.baps.end())
        {
            raise(Errc::ScenarioConfigError,
                  "flow references unknown BAP '" + inst.spec->bap + "'");
        }
        return *it->second;
    }

    std::vector<node::RequestTarget> searchTargets(const FlowInstance& inst)
    {
        const auto& disc = inst.spec->discovery;
        const std::string home = mWorld.home_registry.at(inst.spec->bap);
        std::vector<node::RequestTarget> targets;

        if (disc.rfind("direct:", 0) == 0)
        {
            std::string bpp = disc.substr(7);
            auto* net = mWorld.networkOf(mWorld.home_registry.at(bpp));
            auto rec = net->reg->find(bpp);
            if (!rec)
            {
                raise(Errc::ScenarioConfigError,
                      "direct discovery target '" + bpp + "' not registered");
            }
            targets.push_back({rec->endpoint, bpp, rec->endpoint,
                               net->spec.registry_id});
            return targets;
        }

        auto* homeNet = mWorld.networkOf(home);
        if (homeNet && homeNet->gw)
        {
            targets.push_back({homeNet->gw_locator, std::nullopt, std::nullopt,
                               home});
        }

        if (disc == "multi-network")
        {
            // Recursive discovery through the root registry, then fan out to
            // each remote network's gateway (or straight to its providers
            // when it runs without one).
            auto resolution = registry::resolve_networks(
                mWorld.scenario->root_locator, {inst.spec->domain, std::nullopt},
                mWorld.fetcher());
            for (const auto& match : resolution.matches)
            {
                if (match.registry_id == home)
                {
                    continue;
                }
                auto* net = mWorld.networkOf(match.registry_id);
                if (net && net->gw)
                {
                    targets.push_back({net->gw_locator, std::nullopt,
                                       std::nullopt, match.registry_id});
                }
                else
                {
                    for (const auto& rec : match.records)
                    {
                        targets.push_back({rec.endpoint, rec.subscriber_id,
                                           rec.endpoint, match.registry_id});
                    }
                }
            }
        }
        else if (disc == "gateway" && targets.empty())
        {
            raise(Errc::ScenarioConfigError,
                  "flow '" + inst.spec->flow_id +
                      "' wants gateway discovery but network '" + home +
                      "' has no gateway");
        }
        return targets;
    }

    void start(FlowInstance& inst)
    {
        try
        {
            auto targets = searchTargets(inst);
            auto payload = node::reference_request_payload(inst.spec->domain,
                                                           "search", "");
            auto [txn, receipts] =
                bapOf(inst).requestFanout("", "search", inst.spec->domain,
                                          payload, targets);
            inst.txn = txn;
            inst.searches_unresolved = static_cast<int>(receipts.size());
            inst.awaiting = "on_search";
            mWorld.by_txn[txn] = &inst;
            for (const auto& receipt : receipts)
            {
                if (receipt->state != node::Receipt::State::Pending)
                {
                    noteSearchReceipt(inst, *receipt);
                }
            }
        }
        catch (const Error& e)
        {
            inst.st = FlowInstance::St::Aborted;
            inst.abort_reason = errc_name(e.code());
        }
    }

    void noteSearchReceipt(FlowInstance& inst, const node::Receipt& receipt)
    {
        inst.searches_unresolved--;
        if (receipt.state == node::Receipt::State::Acked)
        {
            inst.searches_acked++;
            if (inst.spec->conclude == "search-only" &&
                inst.st == FlowInstance::St::Running)
            {
                inst.st = FlowInstance::St::Completed;
            }
        }
        if (inst.searches_unresolved == 0 && inst.searches_acked == 0 &&
            inst.st == FlowInstance::St::Running)
        {
            inst.st = FlowInstance::St::Aborted;
            inst.abort_reason = "SEARCH_FAILED";
        }
    }

    void installHooks()
    {
        for (auto& [id, bap] : mWorld.baps)
        {
            node::BapNode::Hooks hooks;
            hooks.on_receipt = [this](const std::string& txn,
                                      const std::string& action,
                                      const node::Receipt& receipt) {
                auto it = mWorld.by_txn.find(txn);
                if (it == mWorld.by_txn.end())
                {
                    return;
                }
                FlowInstance& inst = *it->second;
                if (action == "search")
                {
                    noteSearchReceipt(inst, receipt);
                    return;
                }
                if (inst.st != FlowInstance::St::Running)
                {
                    return;
                }
                if (receipt.state != node::Receipt::State::Acked)
                {
                    inst.st = FlowInstance::St::Aborted;
                    inst.abort_reason =
                        "SEND_FAILED:" + action +
                        (receipt.ack.error_code ? ":" + *receipt.ack.error_code
                                                : "");
                }
            };
            hooks.on_callback = [this](const std::string& txn,
                                       const core::Envelope& cb,
                                       core::LifecycleState state) {
                auto it = mWorld.by_txn.find(txn);
                if (it != mWorld.by_txn.end())
                {
                    advance(*it->second, cb, state);
                }
            };
            hooks.on_timeout = [this](const std::string& txn,
                                      const std::string& expected) {
                auto it = mWorld.by_txn.find(txn);
                if (it == mWorld.by_txn.end())
                {
                    return;
                }
                FlowInstance& inst = *it->second;
                if (inst.st != FlowInstance::St::Running)
                {
                    return;
                }
                if (expected == "on_search")
                {
                    if (!inst.selected && inst.spec->conclude != "search-only")
                    {
                        inst.st = FlowInstance::St::Aborted;
                        inst.abort_reason = "TIMEOUT:on_search";
                    }
                }
                else if (inst.awaiting == expected)
                {
                    inst.st = FlowInstance::St::Aborted;
                    inst.abort_reason = "TIMEOUT:" + expected;
                }
            };
            bap->setHooks(hooks);
        }
    }

    bool offerUsable(const core::Envelope& cb)
    {
        static const core::FieldPath kProviders =
            core::FieldPath::parse("catalog.providers");
        const core::Payload* providers = core::get_path(cb.message, kProviders);
        return providers && providers->is_array() && !providers->empty();
    }

    void sendLater(FlowInstance& inst, const std::string& action,
                   core::Millis delay)
    {
        inst.awaiting = core::ActionRegistry::core().pairCallback(action);
        FlowInstance* ptr = &inst;
        mWorld.scheduler.scheduleAfter(delay, [this, ptr, action] {
            if (ptr->st != FlowInstance::St::Running)
            {
                return;
            }
            try
            {
                bapOf(*ptr).request(
                    ptr->txn, action, ptr->spec->domain,
                    node::reference_request_payload(ptr->spec->domain, action,
                                                    ptr->txn),
                    ptr->order_target);
            }
            catch (const Error& e)
            {
                ptr->st = FlowInstance::St::Aborted;
                ptr->abort_reason = errc_name(e.code());
            }
        });
    }

    void advance(FlowInstance& inst, const core::Envelope& cb,
                 core::LifecycleState state)
    {
        using S = core::LifecycleState;
        if (inst.st != FlowInstance::St::Running)
        {
            return;
        }
        const std::string& action = cb.context.action;

        switch (state)
        {
        case S::OFFERS_RECEIVED:
            if (!inst.selected && inst.spec->conclude != "search-only" &&
                offerUsable(cb))
            {
                inst.selected = true;
                inst.order_target.locator = cb.context.bpp_uri.value_or("");
                inst.order_target.bpp_id = cb.context.bpp_id;
                inst.order_target.bpp_uri = cb.context.bpp_uri;
                auto home = mWorld.home_registry.find(
                    cb.context.bpp_id.value_or(""));
                inst.order_target.registry_id =
                    home == mWorld.home_registry.end() ? std::string()
                                                       : home->second;
                sendLater(inst, "select", inst.spec->think_ms);
            }
            break;
        case S::QUOTED:
            sendLater(inst, inst.spec->conclude == "cancel" ? "cancel" : "init",
                      inst.spec->think_ms);
            break;
        case S::TERMS_OFFERED:
            sendLater(inst, "confirm", inst.spec->think_ms);
            break;
        case S::ACTIVE:
            if (action == "on_confirm" || action == "on_status")
            {
                sendLater(inst, "status", inst.spec->status_poll_ms);
            }
            break;
        case S::COMPLETED:
            inst.st = FlowInstance::St::Completed;
            inst.awaiting.clear();
            break;
        case S::CANCELLED:
            inst.st = FlowInstance::St::Cancelled;
            inst.awaiting.clear();
            break;
        default:
            break;
        }
    }

    World& mWorld;
};

// ---------------------------------------------------------------------------
// Governance and assertions

void
schedule_governance(World& world)
{
    for (const auto& step : world.scenario->governance)
    {
        auto* worldPtr = &world;
        auto thresholds = step.thresholds;
        world.scheduler.scheduleAt(core::Timestamp{step.at_ms}, [worldPtr,
                                                                 thresholds] {
            core::Timestamp now = worldPtr->scheduler.now();
            std::set<std::string> subjects;
            for (const auto& [id, reg] : worldPtr->home_registry)
            {
                subjects.insert(id);
            }
            auto telemetry = aggregate_telemetry(worldPtr->log.records(),
                                                 core::Timestamp{0}, now,
                                                 subjects);
            for (const auto& flag :
                 detect_anomalies(telemetry, thresholds))
            {
                worldPtr->log.append({now, "governance", "LOCAL", "telemetry",
                                      "-", "FLAGGED:" + flag.subscriber_id});
                auto homeIt =
                    worldPtr->home_registry.find(flag.subscriber_id);
                if (homeIt == worldPtr->home_registry.end())
                {
                    continue;
                }
                auto* net = worldPtr->networkOf(homeIt->second);
                auto rec = net->reg->find(flag.subscriber_id);
                if (rec && rec->status == registry::SubscriberStatus::ACTIVE)
                {
                    net->reg->setSubscriberStatus(
                        flag.subscriber_id,
                        registry::SubscriberStatus::SUSPENDED);
                    worldPtr->log.append({now, "governance", "LOCAL",
                                          "suspend", "-",
                                          "SUSPENDED:" + flag.subscriber_id});
                }
            }
        });
    }
}

AssertionResult
evaluate_assertion(const World& world, const ScenarioResult& result,
                   const AssertionSpec& spec)
{
    AssertionResult out;
    out.kind = spec.kind;

    auto flowsOf = [&](const std::string& flowId) {
        std::vector<const FlowResult*> flows;
        for (const auto& f : result.flows)
        {
            if (f.flow_id == flowId)
            {
                flows.push_back(&f);
            }
        }
        return flows;
    };

    if (spec.kind == "min_terminal_fraction")
    {
        double want = spec.params.at("value").get<double>();
        double got = result.flows.empty()
                         ? 1.0
                         : static_cast<double>(result.terminal_flows()) /
                               static_cast<double>(result.flows.size());
        out.pass = got >= want;
        out.detail = std::to_string(result.terminal_flows()) + "/" +
                     std::to_string(result.flows.size()) + " terminal";
    }
    else if (spec.kind == "flow_state")
    {
        auto flows = flowsOf(spec.params.at("flow").get<std::string>());
        auto want = core::state_from_name(
            spec.params.at("state").get<std::string>());
        out.pass = !flows.empty();
        for (const auto* f : flows)
        {
            if (!f->lifecycle_state || *f->lifecycle_state != want)
            {
                out.pass = false;
                out.detail = f->instance_id + " is " +
                             (f->lifecycle_state
                                  ? core::state_name(*f->lifecycle_state)
                                  : "absent");
            }
        }
    }
    else if (spec.kind == "flow_status")
    {
        auto flows = flowsOf(spec.params.at("flow").get<std::string>());
        std::string prefix = spec.params.at("status_prefix").get<std::string>();
        out.pass = !flows.empty();
        for (const auto* f : flows)
        {
            if (f->status.rfind(prefix, 0) != 0)
            {
                out.pass = false;
                out.detail = f->instance_id + " is " + f->status;
            }
        }
    }
    else if (spec.kind == "pending_drained")
    {
        out.pass = result.pending_remaining == 0;
        out.detail =
            std::to_string(result.pending_remaining) + " entries remain";
    }
    else if (spec.kind == "no_duplicate_history")
    {
        out.pass = true;
        auto checkHistory = [&](const core::OrderLifecycle& lc) {
            std::set<std::pair<std::string, std::string>> seen;
            for (const auto& entry : lc.history)
            {
                if (entry.message_id.empty())
                {
                    continue;
                }
                if (!seen.insert({entry.action, entry.message_id}).second)
                {
                    out.pass = false;
                    out.detail = "duplicate " + entry.action + " in " +
                                 lc.transaction_id;
                }
            }
        };
        for (const auto& [id, bap] : world.baps)
        {
            for (const auto& [txn, lc] : bap->lifecycles())
            {
                checkHistory(lc);
            }
        }
    }
    else if (spec.kind == "flagged")
    {
        std::string who = spec.params.at("subscriber").get<std::string>();
        out.pass = false;
        for (const auto& ev : result.events)
        {
            if (ev.verdict == "FLAGGED:" + who)
            {
                out.pass = true;
            }
        }
        out.detail = who;
    }
    else if (spec.kind == "no_recv_after_suspension")
    {
        std::string who = spec.params.at("subscriber").get<std::string>();
        std::optional<core::Timestamp> suspendedAt;
        for (const auto& ev : result.events)
        {
            if (ev.verdict == "SUSPENDED:" + who)
            {
                suspendedAt = ev.at;
                break;
            }
        }
        if (!suspendedAt)
        {
            out.pass = false;
            out.detail = who + " was never suspended";
        }
        else
        {
            int after = 0;
            for (const auto& ev : result.events)
            {
                if (ev.node == who && ev.direction == "RECV" &&
                    ev.action == "search" && ev.at > *suspendedAt)
                {
                    after++;
                }
            }
            out.pass = after == 0;
            out.detail = std::to_string(after) + " deliveries after suspension";
        }
    }
    else
    {
        out.pass = false;
        out.detail = "unknown assertion kind";
    }
    return out;
}

} // namespace

size_t
ScenarioResult::terminal_flows() const
{
    size_t n = 0;
    for (const auto& f : flows)
    {
        if (f.status == "COMPLETED" || f.status == "CANCELLED")
        {
            n++;
        }
    }
    return n;
}

ScenarioResult
run_scenario(const Scenario& s, const RunOptions& opts)
{
    World world;
    world.scenario = &s;
    world.opts = opts;
    build_world(world);

    FlowEngine engine(world);
    engine.scheduleAll();
    schedule_governance(world);

    if (opts.concurrent)
    {
        world.scheduler.runConcurrent(opts.workers);
    }
    else
    {
        world.scheduler.run();
    }

    ScenarioResult result;
    result.events = world.log.records();
    result.log_text = world.log.render();

    for (const auto& inst : world.instances)
    {
        FlowResult fr;
        fr.instance_id = inst->id;
        fr.flow_id = inst->spec->flow_id;
        fr.transaction_id = inst->txn;
        switch (inst->st)
        {
        case FlowInstance::St::Running:
            fr.status = "RUNNING";
            break;
        case FlowInstance::St::Completed:
            fr.status = "COMPLETED";
            break;
        case FlowInstance::St::Cancelled:
            fr.status = "CANCELLED";
            break;
        case FlowInstance::St::Aborted:
            fr.status = "ABORTED:" + inst->abort_reason;
            break;
        }
        if (!inst->txn.empty())
        {
            auto& bap = *world.baps.at(inst->spec->bap);
            if (auto lc = bap.lifecycle(inst->txn))
            {
                fr.lifecycle_state = lc->state;
            }
        }
        result.flows.push_back(std::move(fr));
    }

    for (const auto& [id, bap] : world.baps)
    {
        result.pending_remaining += bap->pendingCount();
    }

    std::set<std::string> subjects;
    for (const auto& [id, reg] : world.home_registry)
    {
        subjects.insert(id);
    }
    result.telemetry =
        aggregate_telemetry(result.events, core::Timestamp{0},
                            world.scheduler.now(), subjects);

    for (const auto& [to, bytes] : world.transport->deliveredBytes())
    {
        try
        {
            auto e = core::decode_envelope(bytes);
            result.corpus.push_back(
                {e.context.action, e.context.domain, e.message});
        }
        catch (const Error&)
        {
        }
    }

    result.ok = true;
    for (const auto& spec : s.assertions)
    {
        auto verdict = evaluate_assertion(world, result, spec);
        result.ok = result.ok && verdict.pass;
        result.assertions.push_back(std::move(verdict));
    }
    return result;
}

} // namespace txnet::sim
