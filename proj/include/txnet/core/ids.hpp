// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace txnet::core {

// Transaction and message identifiers are 128-bit random values rendered as
// 32 lowercase hex characters. Seeded generators give the simulator
// reproducible runs; entropy-seeded ones are for live use.
class IdGenerator
{
  public:
    explicit IdGenerator(std::uint64_t seed) : mRng(seed) {}

    static IdGenerator fromEntropy();

    std::string next();

  private:
    std::mt19937_64 mRng;
};

bool looks_like_id(const std::string& s);

} // namespace txnet::core
