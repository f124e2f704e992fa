// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpl {

enum class ErrorKind {
  NotStrictlyConvex,
  OriginOutside,
  PerturbationTooLarge,
  NotConvexPotential,
  LebesgueModeRestriction,
  NewtonDivergence,
  FlowNotConvex,
  CoercivityFailure,
  ZeroMean,
  PinchingUndeclared,
  ConfigError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bpl
