// SPDX-License-Identifier: Apache-2.0
#include "bpl/errors.hpp"

namespace bpl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorKind::OriginOutside: return "OriginOutside";
    case ErrorKind::PerturbationTooLarge: return "PerturbationTooLarge";
    case ErrorKind::NotConvexPotential: return "NotConvexPotential";
    case ErrorKind::LebesgueModeRestriction: return "LebesgueModeRestriction";
    case ErrorKind::NewtonDivergence: return "NewtonDivergence";
    case ErrorKind::FlowNotConvex: return "FlowNotConvex";
    case ErrorKind::CoercivityFailure: return "CoercivityFailure";
    case ErrorKind::ZeroMean: return "ZeroMean";
    case ErrorKind::PinchingUndeclared: return "PinchingUndeclared";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace bpl
