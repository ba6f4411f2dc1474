// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plconj::cli::run(args, std::cout, std::cerr);
}
