// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "txnet/core/envelope.hpp"
#include "txnet/sign/keys.hpp"

#include <functional>
#include <optional>
#include <string>

namespace txnet::sign {

// SHA-256 over the canonical envelope body (context + message, no signature).
Bytes canonical_digest(const core::Envelope& e);
Bytes sha256(const std::string& bytes);

// Tolerance applied to the created/expires window so nodes with slightly
// skewed clocks still verify. Fixed at 5 s.
inline constexpr core::Millis kClockSkewMs = 5000;

// Signs the canonical body of `e`. The signature covers a base string built
// from (subscriber_id, key_id, created, expires, digest), so validity bounds
// are tamper-evident too. Throws ExpiredKey when the key's validity window
// has passed, and raises on validity <= 0.
SignatureHeader sign_envelope(const core::Envelope& e, const KeyPair& kp,
                              const std::string& subscriber_id,
                              core::Millis validity, core::Timestamp now);

enum class VerifyFailure
{
    UnknownKey,
    DigestMismatch,
    BadSignature,
    Expired,
};

const char* verify_failure_name(VerifyFailure f);

struct Verdict
{
    bool valid = false;
    std::optional<VerifyFailure> reason;

    static Verdict ok() { return Verdict{true, std::nullopt}; }
    static Verdict bad(VerifyFailure f) { return Verdict{false, f}; }
};

// Resolves (subscriber_id, key_id) to verification-key bytes; typically
// backed by a registry. Empty result means the key is unknown (which is also
// how suspension surfaces here).
using KeyResolver =
    std::function<std::optional<Bytes>(const std::string& subscriber_id,
                                       const std::string& key_id)>;

// Valid iff the key resolves, the digest matches the recomputed canonical
// digest, the signature verifies, and now is inside [created, expires]
// (plus skew). All failures come back as a verdict, never as an exception.
Verdict verify_envelope(const core::Envelope& e, const SignatureHeader& h,
                        const KeyResolver& resolve_key, core::Timestamp now);

// Convenience: signs and attaches the header.
core::Envelope signed_envelope(core::Envelope e, const KeyPair& kp,
                               const std::string& subscriber_id,
                               core::Millis validity, core::Timestamp now);

} // namespace txnet::sign
