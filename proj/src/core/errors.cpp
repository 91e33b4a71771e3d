// Copyright 2026 The txnet Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "txnet/core/errors.hpp"

namespace txnet {

const char*
errc_name(Errc c)
{
    switch (c)
    {
    case Errc::UnknownAction:
        return "UnknownAction";
    case Errc::NonPositiveTtl:
        return "NonPositiveTtl";
    case Errc::AlreadyACallback:
        return "AlreadyACallback";
    case Errc::DuplicateAction:
        return "DuplicateAction";
    case Errc::MalformedDocument:
        return "MalformedDocument";
    case Errc::MissingContextField:
        return "MissingContextField";
    case Errc::IllegalTransition:
        return "IllegalTransition";
    case Errc::UnsupportedAlgorithm:
        return "UnsupportedAlgorithm";
    case Errc::ExpiredKey:
        return "ExpiredKey";
    case Errc::DuplicateSubscriber:
        return "DuplicateSubscriber";
    case Errc::InvalidRecord:
        return "InvalidRecord";
    case Errc::UnknownSubscriber:
        return "UnknownSubscriber";
    case Errc::RootUnreachable:
        return "RootUnreachable";
    case Errc::TrustNotEstablished:
        return "TrustNotEstablished";
    case Errc::MalformedPolicy:
        return "MalformedPolicy";
    case Errc::NotASearch:
        return "NotASearch";
    case Errc::SenderUnverified:
        return "SenderUnverified";
    case Errc::EmptyInput:
        return "EmptyInput";
    case Errc::TransportFailure:
        return "TransportFailure";
    case Errc::MalformedConfig:
        return "MalformedConfig";
    case Errc::UnknownFieldPath:
        return "UnknownFieldPath";
    case Errc::DomainMismatch:
        return "DomainMismatch";
    case Errc::TargetUnreachable:
        return "TargetUnreachable";
    case Errc::ScenarioConfigError:
        return "ScenarioConfigError";
    case Errc::IoError:
        return "IoError";
    }
    return "UnknownError";
}

} // namespace txnet
