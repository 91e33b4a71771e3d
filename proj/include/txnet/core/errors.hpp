// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace txnet {

enum class Errc
{
    // core-model
    UnknownAction,
    NonPositiveTtl,
    AlreadyACallback,
    DuplicateAction,
    MalformedDocument,
    MissingContextField,
    IllegalTransition,
    // signing
    UnsupportedAlgorithm,
    ExpiredKey,
    // registry
    DuplicateSubscriber,
    InvalidRecord,
    UnknownSubscriber,
    RootUnreachable,
    TrustNotEstablished,
    // gateway
    MalformedPolicy,
    NotASearch,
    SenderUnverified,
    EmptyInput,
    // node-engine
    TransportFailure,
    // adaptation
    MalformedConfig,
    UnknownFieldPath,
    DomainMismatch,
    // conformance
    TargetUnreachable,
    // harness
    ScenarioConfigError,
    IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error
{
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message)
        , mCode(code)
    {
    }

    Errc code() const { return mCode; }

  private:
    Errc mCode;
};

[[noreturn]] inline void
raise(Errc code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace txnet
