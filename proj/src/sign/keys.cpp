// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sign/keys.hpp"
#include "txnet/core/errors.hpp"

#include <sodium.h>

#include <fstream>
#include <sstream>

namespace txnet::sign {

namespace {

void
ensure_sodium()
{
    if (sodium_init() < 0)
    {
        raise(Errc::UnsupportedAlgorithm, "libsodium failed to initialize");
    }
}

std::uint64_t
splitmix64(std::uint64_t& state)
{
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Bytes
seeded_bytes(std::uint64_t seed, size_t n)
{
    Bytes out(n);
    std::uint64_t state = seed;
    for (size_t i = 0; i < n; i += 8)
    {
        std::uint64_t v = splitmix64(state);
        for (size_t j = 0; j < 8 && i + j < n; ++j)
        {
            out[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
        }
    }
    return out;
}

} // namespace

std::string
derive_key_id(const Bytes& verification_key)
{
    unsigned char hash[crypto_hash_sha256_BYTES];
    crypto_hash_sha256(hash, verification_key.data(), verification_key.size());
    static const char* hex = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 8; ++i)
    {
        id += hex[hash[i] >> 4];
        id += hex[hash[i] & 0xf];
    }
    return id;
}

KeyPair
generate_keypair(const std::string& algorithm, std::optional<std::uint64_t> seed)
{
    ensure_sodium();
    KeyPair kp;
    kp.algorithm = algorithm;
    if (algorithm == kAlgEd25519)
    {
        kp.signing_key.resize(crypto_sign_SECRETKEYBYTES);
        kp.verification_key.resize(crypto_sign_PUBLICKEYBYTES);
        if (seed)
        {
            Bytes s = seeded_bytes(*seed, crypto_sign_SEEDBYTES);
            crypto_sign_seed_keypair(kp.verification_key.data(),
                                     kp.signing_key.data(), s.data());
        }
        else
        {
            crypto_sign_keypair(kp.verification_key.data(),
                                kp.signing_key.data());
        }
    }
    else if (algorithm == kAlgTestDeterministic)
    {
        // Symmetric by construction: verification key == signing key.
        kp.signing_key = seeded_bytes(seed.value_or(0), crypto_auth_KEYBYTES);
        kp.verification_key = kp.signing_key;
    }
    else
    {
        raise(Errc::UnsupportedAlgorithm,
              "unsupported signature algorithm '" + algorithm + "'");
    }
    kp.key_id = derive_key_id(kp.verification_key);
    return kp;
}

core::Payload
keypair_to_json(const KeyPair& kp)
{
    core::Payload doc = core::Payload::object();
    doc["key_id"] = kp.key_id;
    doc["algorithm"] = kp.algorithm;
    doc["signing_key"] = base64_encode(kp.signing_key);
    doc["verification_key"] = base64_encode(kp.verification_key);
    if (kp.valid_until)
    {
        doc["valid_until"] = core::to_rfc3339(*kp.valid_until);
    }
    return doc;
}

KeyPair
keypair_from_json(const core::Payload& doc)
{
    if (!doc.is_object() || !doc.contains("key_id") ||
        !doc.contains("algorithm") || !doc.contains("signing_key") ||
        !doc.contains("verification_key"))
    {
        raise(Errc::MalformedDocument, "key file missing required fields");
    }
    KeyPair kp;
    kp.key_id = doc.at("key_id").get<std::string>();
    kp.algorithm = doc.at("algorithm").get<std::string>();
    kp.signing_key = base64_decode(doc.at("signing_key").get<std::string>());
    kp.verification_key =
        base64_decode(doc.at("verification_key").get<std::string>());
    if (doc.contains("valid_until"))
    {
        kp.valid_until =
            core::from_rfc3339(doc.at("valid_until").get<std::string>());
    }
    return kp;
}

void
save_keypair(const KeyPair& kp, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        raise(Errc::IoError, "cannot write key file " + path);
    }
    out << keypair_to_json(kp).dump() << "\n";
}

KeyPair
load_keypair(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        raise(Errc::IoError, "cannot read key file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = core::Payload::parse(buf.str(), nullptr, false);
    if (doc.is_discarded())
    {
        raise(Errc::MalformedDocument, "key file is not well-formed: " + path);
    }
    return keypair_from_json(doc);
}

} // namespace txnet::sign
