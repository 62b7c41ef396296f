// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_CLI_CLI_HPP
#define QUARTIC_HEAT_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qheat::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitUsage = 2,
  kExitTolerance = 3,
};

/// Entry point of the quartic-heat tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qheat::cli

#endif  // QUARTIC_HEAT_CLI_CLI_HPP
