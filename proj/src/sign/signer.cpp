// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/sign/signer.hpp"
#include "txnet/core/errors.hpp"

#include <sodium.h>

namespace txnet::sign {

Bytes
sha256(const std::string& bytes)
{
    Bytes out(crypto_hash_sha256_BYTES);
    crypto_hash_sha256(out.data(),
                       reinterpret_cast<const unsigned char*>(bytes.data()),
                       bytes.size());
    return out;
}

Bytes
canonical_digest(const core::Envelope& e)
{
    return sha256(core::canonical_body(e));
}

const char*
verify_failure_name(VerifyFailure f)
{
    switch (f)
    {
    case VerifyFailure::UnknownKey:
        return "UnknownKey";
    case VerifyFailure::DigestMismatch:
        return "DigestMismatch";
    case VerifyFailure::BadSignature:
        return "BadSignature";
    case VerifyFailure::Expired:
        return "Expired";
    }
    return "?";
}

namespace {

// What the signature actually covers. Binding identity and validity bounds
// to the digest keeps every header field tamper-evident.
std::string
signing_base(const std::string& subscriber_id, const std::string& key_id,
             core::Timestamp created, core::Timestamp expires,
             const Bytes& digest)
{
    std::string base = "subscriber=" + subscriber_id + "&key=" + key_id +
                       "&created=" + core::to_rfc3339(created) +
                       "&expires=" + core::to_rfc3339(expires) + "&digest=";
    base += base64_encode(digest);
    return base;
}

Bytes
sign_base(const std::string& algorithm, const Bytes& signing_key,
          const std::string& base)
{
    const auto* msg = reinterpret_cast<const unsigned char*>(base.data());
    if (algorithm == kAlgEd25519)
    {
        Bytes sig(crypto_sign_BYTES);
        crypto_sign_detached(sig.data(), nullptr, msg, base.size(),
                             signing_key.data());
        return sig;
    }
    if (algorithm == kAlgTestDeterministic)
    {
        Bytes sig(crypto_auth_BYTES);
        crypto_auth(sig.data(), msg, base.size(), signing_key.data());
        return sig;
    }
    raise(Errc::UnsupportedAlgorithm,
          "unsupported signature algorithm '" + algorithm + "'");
}

bool
verify_base(const std::string& algorithm, const Bytes& verification_key,
            const std::string& base, const Bytes& sig)
{
    const auto* msg = reinterpret_cast<const unsigned char*>(base.data());
    if (algorithm == kAlgEd25519)
    {
        if (sig.size() != crypto_sign_BYTES ||
            verification_key.size() != crypto_sign_PUBLICKEYBYTES)
        {
            return false;
        }
        return crypto_sign_verify_detached(sig.data(), msg, base.size(),
                                           verification_key.data()) == 0;
    }
    if (algorithm == kAlgTestDeterministic)
    {
        if (sig.size() != crypto_auth_BYTES ||
            verification_key.size() != crypto_auth_KEYBYTES)
        {
            return false;
        }
        return crypto_auth_verify(sig.data(), msg, base.size(),
                                  verification_key.data()) == 0;
    }
    return false;
}

} // namespace

SignatureHeader
sign_envelope(const core::Envelope& e, const KeyPair& kp,
              const std::string& subscriber_id, core::Millis validity,
              core::Timestamp now)
{
    if (validity <= 0)
    {
        raise(Errc::NonPositiveTtl, "signature validity must be positive");
    }
    if (kp.valid_until && now > *kp.valid_until)
    {
        raise(Errc::ExpiredKey, "key " + kp.key_id + " is past its validity");
    }
    if (sodium_init() < 0)
    {
        raise(Errc::UnsupportedAlgorithm, "libsodium failed to initialize");
    }
    SignatureHeader h;
    h.subscriber_id = subscriber_id;
    h.key_id = kp.key_id;
    h.algorithm = kp.algorithm;
    h.created = now;
    h.expires = now + validity;
    h.digest = canonical_digest(e);
    h.signature = sign_base(kp.algorithm, kp.signing_key,
                            signing_base(subscriber_id, kp.key_id, h.created,
                                         h.expires, h.digest));
    return h;
}

Verdict
verify_envelope(const core::Envelope& e, const SignatureHeader& h,
                const KeyResolver& resolve_key, core::Timestamp now)
{
    auto key = resolve_key(h.subscriber_id, h.key_id);
    if (!key)
    {
        return Verdict::bad(VerifyFailure::UnknownKey);
    }
    Bytes expected;
    try
    {
        expected = canonical_digest(e);
    }
    catch (const Error&)
    {
        return Verdict::bad(VerifyFailure::DigestMismatch);
    }
    if (expected != h.digest)
    {
        return Verdict::bad(VerifyFailure::DigestMismatch);
    }
    if (!verify_base(h.algorithm, *key,
                     signing_base(h.subscriber_id, h.key_id, h.created,
                                  h.expires, h.digest),
                     h.signature))
    {
        return Verdict::bad(VerifyFailure::BadSignature);
    }
    if (now < h.created - kClockSkewMs || now > h.expires + kClockSkewMs)
    {
        return Verdict::bad(VerifyFailure::Expired);
    }
    return Verdict::ok();
}

core::Envelope
signed_envelope(core::Envelope e, const KeyPair& kp,
                const std::string& subscriber_id, core::Millis validity,
                core::Timestamp now)
{
    e.signature = sign_envelope(e, kp, subscriber_id, validity, now);
    return e;
}

} // namespace txnet::sign
