// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat_cli/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "quartic_heat/errors.hpp"

namespace qheat::cli {

bool CompareResult::all_ok() const {
  for (const auto& r : rows) {
    if (!r.kernel.ok()) return false;
  }
  return true;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string direction_label(const RealVec2& x) {
  if (x[1] == 0.0 && x[0] != 0.0) return "axis";
  if (x[0] == x[1] && x[0] != 0.0) return "bisector";
  return "generic(" + format_number(x[0]) + ";" + format_number(x[1]) + ")";
}

CompareResult compare_sweep(const SweepConfig& cfg) {
  if (!(cfg.lambda_min >= 1.0) || !(cfg.lambda_max >= cfg.lambda_min)) {
    throw DomainError("sweep needs 1 <= lambda-min <= lambda-max");
  }
  if (cfg.steps < 2) throw DomainError("sweep needs steps >= 2");
  const Coefficients c = Coefficients::make(cfg.alpha, cfg.beta, cfg.gamma);
  CompareResult res;
  res.estimate = asymptotic_estimate(c, cfg.x);
  res.direction = direction_label(cfg.x);
  QuadratureSpec spec;
  spec.target_rel_tol = cfg.tol;
  const auto& e = res.estimate;
  res.rows.reserve(cfg.steps);
  for (int i = 0; i < cfg.steps; ++i) {
    const double lambda =
        cfg.lambda_min + (cfg.lambda_max - cfg.lambda_min) * i / (cfg.steps - 1);
    CompareRow row;
    row.lambda = lambda;
    row.kernel = f_lambda(c, cfg.x, lambda, spec, cfg.method);
    const double scale = std::exp(e.exp_rate_lambda * lambda);
    row.f_scaled = row.kernel.value * scale;
    row.model_scaled = e.f_model(lambda) * scale;
    row.abs_diff = std::abs(row.f_scaled - row.model_scaled);
    row.normalized_diff = row.abs_diff * lambda / e.amplitude;
    res.rows.push_back(row);
  }
  return res;
}

void write_compare_csv(const SweepConfig& cfg, const CompareResult& r,
                       std::ostream& out) {
  out << "# quartic-heat v1, beta=" << format_number(cfg.beta)
      << ", direction=" << r.direction << ", alpha=" << format_number(cfg.alpha)
      << ", gamma=" << format_number(cfg.gamma)
      << ", rate=" << format_number(r.estimate.exp_rate_lambda)
      << ", form=" << to_string(r.estimate.oscillation_form) << "\n";
  out << "lambda,F_numeric_scaled,G_asymptotic_scaled,abs_diff,normalized_diff,"
         "estimated_error_scaled,method,status\n";
  for (const auto& row : r.rows) {
    const double scale = std::exp(r.estimate.exp_rate_lambda * row.lambda);
    out << format_number(row.lambda) << ',' << format_number(row.f_scaled) << ','
        << format_number(row.model_scaled) << ',' << format_number(row.abs_diff)
        << ',' << format_number(row.normalized_diff) << ','
        << format_number(row.kernel.estimated_error * scale) << ','
        << to_string(row.kernel.method) << ',' << to_string(row.kernel.status)
        << '\n';
  }
}

}  // namespace qheat::cli
