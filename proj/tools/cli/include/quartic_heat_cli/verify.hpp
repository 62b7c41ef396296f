// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_CLI_VERIFY_HPP
#define QUARTIC_HEAT_CLI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qheat::cli {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Description of the first failing case, empty when all passed.
  std::string first_counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Tolerance of the identity checks.
  double identity_tol = 1e-10;
  /// Scales the number of random samples.
  double sample_factor = 1.0;
};

SuiteResult verify_identities(const VerifyOptions& opt);
SuiteResult verify_finsler(const VerifyOptions& opt);
SuiteResult verify_quadrature(const VerifyOptions& opt);
SuiteResult verify_saddles(const VerifyOptions& opt);

/// "identities", "finsler", "quadrature", "saddles" or "all".
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions& opt);

}  // namespace qheat::cli

#endif  // QUARTIC_HEAT_CLI_VERIFY_HPP
