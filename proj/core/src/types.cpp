// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/types.hpp"

#include <cmath>
#include <string>

#include "quartic_heat/errors.hpp"

namespace qheat {

Coefficients Coefficients::make(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw DomainError("coefficients must be finite");
  }
  if (alpha <= 0.0 || gamma <= 0.0) {
    throw DomainError("alpha and gamma must be positive");
  }
  const double q = beta / std::sqrt(alpha * gamma);
  if (!(q > -1.0)) {
    throw DomainError("not elliptic: Q = beta/sqrt(alpha*gamma) = " +
                      std::to_string(q) + " <= -1");
  }
  return Coefficients(alpha, beta, gamma, q);
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::kSubconvex:
      return "subconvex";
    case Branch::kStronglyConvex:
      return "strongly_convex";
    case Branch::kSuperconvex:
      return "superconvex";
  }
  return "unknown";
}

}  // namespace qheat
