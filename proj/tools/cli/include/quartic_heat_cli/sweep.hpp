// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_CLI_SWEEP_HPP
#define QUARTIC_HEAT_CLI_SWEEP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "quartic_heat/quadrature.hpp"
#include "quartic_heat/saddle.hpp"
#include "quartic_heat/types.hpp"

namespace qheat::cli {

struct SweepConfig {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
  RealVec2 x{1.0, 0.0};
  double lambda_min = 5.0;
  double lambda_max = 25.0;
  int steps = 201;
  MethodPolicy method = MethodPolicy::kAuto;
  double tol = 1e-8;
};

/// One row of a model-vs-oracle comparison. Both curves are scaled by
/// exp(sigma' lambda) with sigma' the model's own rate.
struct CompareRow {
  double lambda;
  double f_scaled;
  double model_scaled;
  double abs_diff;
  /// abs_diff * lambda / amplitude: the gap relative to the model envelope.
  double normalized_diff;
  KernelValue kernel;
};

struct CompareResult {
  AsymptoticEstimate estimate;
  std::string direction;
  std::vector<CompareRow> rows;
  bool all_ok() const;
};

/// Throws DomainError for lambda_min < 1, steps < 2 or an unsupported
/// (beta, x) pair.
CompareResult compare_sweep(const SweepConfig& cfg);

/// "axis", "bisector" or "generic(x1,x2)".
std::string direction_label(const RealVec2& x);

/// Fixed-format CSV with the versioned header comment.
void write_compare_csv(const SweepConfig& cfg, const CompareResult& r,
                       std::ostream& out);

/// Locale-independent "%.12e".
std::string format_number(double v);

}  // namespace qheat::cli

#endif  // QUARTIC_HEAT_CLI_SWEEP_HPP
