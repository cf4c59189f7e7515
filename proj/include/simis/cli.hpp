// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMIS_CLI_HPP
#define SIMIS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace simis {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitWorkBudget = 3;

/// Runs one `simis` invocation; `args` excludes the program name. Output
/// goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simis

#endif  // SIMIS_CLI_HPP
