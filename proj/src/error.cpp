// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/error.hpp"

namespace simis {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AntichainViolation: return "AntichainViolation";
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::NotBerge: return "NotBerge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace simis
