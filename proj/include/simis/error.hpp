// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMIS_ERROR_HPP
#define SIMIS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace simis {

enum class ErrorKind {
  AntichainViolation,
  EmptyEdge,
  UnknownVertex,
  DimensionMismatch,
  InstanceTooLarge,
  NotACover,
  WorkBudgetExceeded,
  NotAGraph,
  NotBerge,
  ParseError,
  ArithmeticOverflow,
  InvalidArgument,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception. The kind is
/// what callers (and the CLI exit-code mapping) switch on; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace simis

#endif  // SIMIS_ERROR_HPP
