// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/finsler.hpp"

#include <cmath>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat {

namespace {

constexpr int kScanPoints = 4096;
constexpr double kAngleTol = 1e-12;

RealVec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Derivatives of A along the unit circle: A_theta = grad A(e) . e_perp and
// A_thetatheta = e_perp^T H(e) e_perp - 4 A(e).
struct CircleSymbol {
  double a, a_t, a_tt;
};

CircleSymbol circle_symbol(const Coefficients& c, double theta) {
  const RealVec2 e = unit(theta);
  const RealVec2 ep{-e[1], e[0]};
  const double a = eval_symbol(c, e);
  const RealVec2 g = symbol_gradient(c, e);
  const double s1 = e[0] * e[0], s2 = e[1] * e[1];
  const double h11 = 12.0 * c.alpha() * s1 + 4.0 * c.beta() * s2;
  const double h22 = 4.0 * c.beta() * s1 + 12.0 * c.gamma() * s2;
  const double h12 = 8.0 * c.beta() * e[0] * e[1];
  const double quad =
      h11 * ep[0] * ep[0] + 2.0 * h12 * ep[0] * ep[1] + h22 * ep[1] * ep[1];
  return {a, dot(g, ep), quad - 4.0 * a};
}

// Objective g(theta) = (x . e_theta) A(e_theta)^{-1/4} and two derivatives.
struct Objective {
  double g, dg, d2g;
};

Objective objective(const Coefficients& c, const RealVec2& x, double theta) {
  const RealVec2 e = unit(theta);
  const double xe = dot(x, e);
  const double xp = -x[0] * e[1] + x[1] * e[0];
  const auto s = circle_symbol(c, theta);
  const double m1 = std::pow(s.a, -0.25);
  const double m5 = m1 / s.a;
  const double m9 = m5 / s.a;
  const double g = xe * m1;
  const double dg = xp * m1 - 0.25 * xe * m5 * s.a_t;
  const double d2g = -xe * m1 - 0.5 * xp * m5 * s.a_t +
                     (5.0 / 16.0) * xe * m9 * s.a_t * s.a_t -
                     0.25 * xe * m5 * s.a_tt;
  return {g, dg, d2g};
}

}  // namespace

double quasi_norm(const Coefficients& c, const RealVec2& xi) {
  return std::pow(eval_symbol(c, xi), 0.25);
}

DualMaximizer dual_norm_maximizer(const Coefficients& c, const RealVec2& x) {
  if (!is_finite(x)) throw DomainError("dual_norm: non-finite argument");
  if (x[0] == 0.0 && x[1] == 0.0) return {0.0, 0.0};

  const double step = 2.0 * kPi / kScanPoints;
  int best = 0;
  double best_value = -1.0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double v = objective(c, x, i * step).g;
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }

  // Safeguarded Newton on g'(theta) = 0 inside [theta_best - step,
  // theta_best + step]; the bracket holds the maximizer since g has at
  // most eight stationary points on the circle.
  double lo = (best - 1) * step;
  double hi = (best + 1) * step;
  double theta = best * step;
  bool converged = false;
  for (int iter = 0; iter < 100; ++iter) {
    const auto o = objective(c, x, theta);
    if (o.dg > 0.0) {
      lo = theta;
    } else {
      hi = theta;
    }
    double next = (o.d2g < 0.0) ? theta - o.dg / o.d2g : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double delta = std::abs(next - theta);
    theta = next;
    if (delta <= kAngleTol || hi - lo <= kAngleTol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("dual_norm: angular refinement did not converge");
  }
  const double value = objective(c, x, theta).g;
  // The scan value is a lower bound; refinement must not lose it.
  if (value < best_value) return {best_value, best * step};
  return {value, theta};
}

double dual_norm(const Coefficients& c, const RealVec2& x) {
  return dual_norm_maximizer(c, x).value;
}

double distance_d0(const Coefficients& c, const RealVec2& x) {
  if (c.is_normalized()) {
    // The axis form needs beta >= 0, the diagonal form beta <= 3; outside
    // those ranges the maximizing direction leaves the ray.
    const double a1 = std::abs(x[0]);
    const double a2 = std::abs(x[1]);
    if (c.beta() >= 0.0 && a2 == 0.0) return a1;
    if (c.beta() >= 0.0 && a1 == 0.0) return a2;
    if (c.beta() <= 3.0 && a1 == a2) {
      return std::pow(2.0, 0.75) * std::pow(1.0 + c.beta(), -0.25) * a1;
    }
  }
  return dual_norm(c, x);
}

DirectionAnalysis direction_stationarity(const Coefficients& c, double phi) {
  const RealVec2 e = unit(phi);
  const auto o = objective(c, e, phi);
  // Equality needs theta = phi to be the global maximizer, not merely a
  // stationary point: the axes lose it for Q < 0, the diagonals for Q > 3.
  const bool equality = dual_norm(c, e) <= o.g * (1.0 + 1e-10);
  return {phi, o.g, o.dg, equality};
}

RealVec2 solve_q(const Coefficients& c, const RealVec2& x) {
  const double q_ratio = c.q();
  if (!(q_ratio > 0.0 && q_ratio < 3.0)) {
    throw DomainError("solve_q requires 0 < Q < 3");
  }
  const double xn = norm(x);
  if (!(xn > 0.0) || !is_finite(x)) throw DomainError("solve_q requires x != 0");

  auto residual = [&](const RealVec2& q) {
    const RealVec2 g = symbol_gradient(c, q);
    return RealVec2{0.25 * g[0] - x[0], 0.25 * g[1] - x[1]};
  };

  const double r0 = std::cbrt(xn);
  RealVec2 q{r0 * x[0] / xn, r0 * x[1] / xn};
  RealVec2 res = residual(q);
  double res_norm = norm(res);
  for (int iter = 0; iter < 100; ++iter) {
    if (res_norm <= 1e-12 * xn) return q;
    // Jacobian of grad A / 4 is H(q) / 4.
    const double s1 = q[0] * q[0], s2 = q[1] * q[1];
    const double j11 = 3.0 * c.alpha() * s1 + c.beta() * s2;
    const double j22 = c.beta() * s1 + 3.0 * c.gamma() * s2;
    const double j12 = 2.0 * c.beta() * q[0] * q[1];
    const double det = j11 * j22 - j12 * j12;
    if (!(std::abs(det) > 0.0)) break;
    const RealVec2 step{(j22 * res[0] - j12 * res[1]) / det,
                        (j11 * res[1] - j12 * res[0]) / det};
    double damping = 1.0;
    bool improved = false;
    for (int h = 0; h < 60; ++h) {
      const RealVec2 trial{q[0] - damping * step[0], q[1] - damping * step[1]};
      const RealVec2 trial_res = residual(trial);
      const double n = norm(trial_res);
      if (n < res_norm) {
        q = trial;
        res = trial_res;
        res_norm = n;
        improved = true;
        break;
      }
      damping *= 0.5;
    }
    if (!improved) break;
  }
  if (res_norm <= 1e-12 * xn) return q;
  throw ConvergenceError("solve_q: Newton iteration did not converge");
}

double check_aq_distance(const Coefficients& c, const RealVec2& x) {
  const RealVec2 q = solve_q(c, x);
  const double target = std::pow(dual_norm(c, x), 4.0 / 3.0);
  return std::abs(eval_symbol(c, q) - target) / target;
}

}  // namespace qheat
