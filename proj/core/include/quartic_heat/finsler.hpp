// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_FINSLER_HPP
#define QUARTIC_HEAT_FINSLER_HPP

#include "quartic_heat/types.hpp"

namespace qheat {

/// p(xi) = A(xi)^{1/4}. Positively 1-homogeneous but not convex outside
/// the strongly convex range.
double quasi_norm(const Coefficients& c, const RealVec2& xi);

struct DualMaximizer {
  /// p*(x) = max over unit e_theta of (x . e_theta) / A(e_theta)^{1/4}.
  double value;
  /// Angle of a maximizing direction.
  double theta;
};

/// Maximizes (x . e_theta) / A(e_theta)^{1/4}: a 4096-point angular scan
/// followed by Newton refinement of the stationarity condition in the best
/// bracket. x = 0 gives value 0. Throws ConvergenceError when the
/// refinement cannot reach 1e-12 in angle.
DualMaximizer dual_norm_maximizer(const Coefficients& c, const RealVec2& x);
double dual_norm(const Coefficients& c, const RealVec2& x);

/// d0(x) = p*(x). Uses the closed forms d0(s,0) = s (beta >= 0) and
/// d0(s,s) = 2^{3/4} (1+beta)^{-1/4} s (beta <= 3) for normalized
/// coefficients.
double distance_d0(const Coefficients& c, const RealVec2& x);

struct DirectionAnalysis {
  double phi;
  /// g(phi) = 1 / A(e_phi)^{1/4}.
  double g_value;
  /// g'(theta) at theta = phi.
  double g_prime;
  /// Whether |x|^2 / p(x) = p*(x) along e_phi.
  bool is_equality_direction;
};

/// Evaluates g(theta) = (e_phi . e_theta) / A(e_theta)^{1/4} and its
/// derivative at theta = phi.
DirectionAnalysis direction_stationarity(const Coefficients& c, double phi);

/// Unique q with grad A(q) / 4 = x, for 0 < Q < 3 and x != 0. Damped Newton
/// started from |x|^{1/3} x/|x|; residual <= 1e-12 |x|.
RealVec2 solve_q(const Coefficients& c, const RealVec2& x);

/// |A(q(x)) - p*(x)^{4/3}| / p*(x)^{4/3}.
double check_aq_distance(const Coefficients& c, const RealVec2& x);

}  // namespace qheat

#endif  // QUARTIC_HEAT_FINSLER_HPP
