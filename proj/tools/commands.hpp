// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plconj::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDistinguished = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plconj::cli
