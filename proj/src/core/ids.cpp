// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/ids.hpp"

namespace txnet::core {

namespace {
const char kHex[] = "0123456789abcdef";
}

IdGenerator
IdGenerator::fromEntropy()
{
    std::random_device rd;
    std::uint64_t seed =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    return IdGenerator(seed);
}

std::string
IdGenerator::next()
{
    std::string out(32, '0');
    for (int half = 0; half < 2; ++half)
    {
        std::uint64_t v = mRng();
        for (int i = 15; i >= 0; --i)
        {
            out[half * 16 + i] = kHex[v & 0xf];
            v >>= 4;
        }
    }
    return out;
}

bool
looks_like_id(const std::string& s)
{
    if (s.size() != 32)
    {
        return false;
    }
    for (char c : s)
    {
        bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
        if (!hex)
        {
            return false;
        }
    }
    return true;
}

} // namespace txnet::core
