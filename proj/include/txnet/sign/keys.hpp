// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/time.hpp"
#include "txnet/sign/signature_header.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace txnet::sign {

// Supported schemes. "ed25519" is the real asymmetric scheme;
// "test-deterministic" is an HMAC-based scheme whose verification key equals
// the signing key — it exists so golden-file tests have bit-stable
// signatures, and must never be used on a live network.
inline constexpr const char* kAlgEd25519 = "ed25519";
inline constexpr const char* kAlgTestDeterministic = "test-deterministic";

struct KeyPair
{
    std::string key_id;
    std::string algorithm;
    Bytes signing_key;
    Bytes verification_key;
    // Optional key validity window; signing past it fails with ExpiredKey.
    std::optional<core::Timestamp> valid_until;

    bool operator==(const KeyPair&) const = default;
};

// Generates a key pair. With a seed the result is reproducible (both
// schemes); without one, ed25519 draws from the system RNG. Throws
// UnsupportedAlgorithm for unknown scheme names.
KeyPair generate_keypair(const std::string& algorithm,
                         std::optional<std::uint64_t> seed = std::nullopt);

// Key files: {algorithm, key_id, signing_key, verification_key} in the
// canonical encoding, base64 for key material. Keep them chmod 600.
core::Payload keypair_to_json(const KeyPair& kp);
KeyPair keypair_from_json(const core::Payload& doc);
void save_keypair(const KeyPair& kp, const std::string& path);
KeyPair load_keypair(const std::string& path);

// Derives the key identifier (first 16 hex chars of the verification key's
// hash) — stable for deterministic keys.
std::string derive_key_id(const Bytes& verification_key);

} // namespace txnet::sign
