// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Seeded random generators used as test oracles. These stay independent of
// the implementation paths they check: they build documents and records
// bottom-up with plain RNG draws.

#include "txnet/core/context.hpp"
#include "txnet/core/envelope.hpp"
#include "txnet/core/ids.hpp"
#include "txnet/core/payload.hpp"

#include <random>
#include <string>
#include <vector>

namespace txnet::testgen {

class Rand
{
  public:
    explicit Rand(std::uint64_t seed) : mRng(seed) {}

    std::uint64_t u64() { return mRng(); }

    int range(int lo, int hi) // inclusive
    {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(mRng);
    }

    double real()
    {
        std::uniform_real_distribution<double> d(-1e6, 1e6);
        return d(mRng);
    }

    bool chance(double p)
    {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(mRng) < p;
    }

    std::string ident(int minLen = 1, int maxLen = 12)
    {
        static const char* alpha = "abcdefghijklmnopqrstuvwxyz0123456789_";
        int n = range(minLen, maxLen);
        std::string out;
        for (int i = 0; i < n; ++i)
        {
            out += alpha[range(0, 36)];
        }
        return out;
    }

    std::string text(int maxLen = 24)
    {
        static const char* chars =
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,-";
        int n = range(0, maxLen);
        std::string out;
        for (int i = 0; i < n; ++i)
        {
            out += chars[range(0, 66)];
        }
        return out;
    }

    template <typename T> const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<size_t>(range(0, static_cast<int>(v.size()) - 1))];
    }

    std::mt19937_64& rng() { return mRng; }

  private:
    std::mt19937_64 mRng;
};

inline core::Payload
random_value(Rand& r, int depth)
{
    int kind = r.range(0, depth > 0 ? 6 : 4);
    switch (kind)
    {
    case 0:
        return core::Payload(r.text());
    case 1:
        return core::Payload(static_cast<std::int64_t>(r.u64() >> 16));
    case 2:
        return core::Payload(r.real());
    case 3:
        return core::Payload(r.chance(0.5));
    case 4:
        return core::Payload(nullptr);
    case 5: {
        core::Payload arr = core::Payload::array();
        int n = r.range(0, 4);
        for (int i = 0; i < n; ++i)
        {
            arr.push_back(random_value(r, depth - 1));
        }
        return arr;
    }
    default: {
        core::Payload obj = core::Payload::object();
        int n = r.range(0, 4);
        for (int i = 0; i < n; ++i)
        {
            obj[r.ident()] = random_value(r, depth - 1);
        }
        return obj;
    }
    }
}

inline core::Payload
random_payload(Rand& r)
{
    core::Payload doc = core::Payload::object();
    std::vector<std::string> roots;
    for (const auto& root : core::payload_roots())
    {
        if (root != "tags") // reserved for the tag mechanism
        {
            roots.push_back(root);
        }
    }
    int n = r.range(1, 4);
    for (int i = 0; i < n; ++i)
    {
        doc[r.pick(roots)] = random_value(r, 3);
    }
    if (r.chance(0.3))
    {
        core::upsert_tag(doc, {r.ident(), r.ident(), r.text()});
    }
    return doc;
}

inline core::Envelope
random_envelope(Rand& r)
{
    static const std::vector<std::string> kDomains = {
        "mobility", "retail", "energy", "financial-services", "logistics"};
    std::vector<std::string> actions;
    for (const auto& [name, info] : core::ActionRegistry::core().entries())
    {
        actions.push_back(name);
        actions.push_back(info.callback);
    }
    core::IdGenerator ids(r.u64());
    core::Envelope e;
    e.context.domain = r.pick(kDomains);
    e.context.action = r.pick(actions);
    e.context.core_version = core::kCoreVersion;
    e.context.bap_id = "bap-" + r.ident();
    e.context.bap_uri = "mem://bap-" + r.ident();
    if (r.chance(0.5))
    {
        e.context.bpp_id = "bpp-" + r.ident();
        e.context.bpp_uri = "mem://bpp-" + r.ident();
    }
    e.context.transaction_id = ids.next();
    e.context.message_id = ids.next();
    e.context.timestamp = core::Timestamp{
        static_cast<std::int64_t>(r.u64() % 4102444800000ULL)};
    e.context.ttl_seconds = r.range(1, 600);
    e.message = random_payload(r);
    return e;
}

} // namespace txnet::testgen
