// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "quartic_heat_cli/cli.hpp"

int main(int argc, char** argv) {
  return qheat::cli::run(argc, argv, std::cout, std::cerr);
}
