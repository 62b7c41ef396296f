// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/finsler.hpp"

namespace qheat {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const Complex kI(0.0, 1.0);

ComplexVec2 conj_reflect(const ComplexVec2& z) {
  // -xi + i eta for z = xi + i eta
  return {-std::conj(z[0]), -std::conj(z[1])};
}

void require_normalized(const Coefficients& c) {
  if (!c.is_normalized()) {
    throw DomainError("closed-form saddles require alpha = gamma = 1");
  }
}

bool relative_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

Complex phase(const Coefficients& c, const RealVec2& x, const ComplexVec2& z) {
  return kI * (x[0] * z[0] + x[1] * z[1]) - 0.25 * eval_symbol(c, z);
}

ComplexVec2 phase_gradient(const Coefficients& c, const RealVec2& x,
                           const ComplexVec2& z) {
  const ComplexVec2 g = symbol_gradient(c, z);
  return {kI * x[0] - 0.25 * g[0], kI * x[1] - 0.25 * g[1]};
}

ComplexMat2 phase_hessian(const Coefficients& c, const ComplexVec2& z) {
  ComplexMat2 h = symbol_hessian(c, z);
  for (auto& row : h) {
    for (auto& v : row) v *= -0.25;
  }
  return h;
}

Complex phase_hessian_det(const Coefficients& c, const ComplexVec2& z) {
  const ComplexMat2 h = phase_hessian(c, z);
  return h[0][0] * h[1][1] - h[0][1] * h[1][0];
}

std::string_view to_string(Direction d) {
  return d == Direction::kAxis ? "axis" : "bisector";
}

RealVec2 unit_point(Direction d) {
  return d == Direction::kAxis ? RealVec2{1.0, 0.0} : RealVec2{1.0, 1.0};
}

RealVec2 saddle_shift(const Coefficients& c, Direction d) {
  require_normalized(c);
  const double b = c.beta();
  if (d == Direction::kBisector && b <= 0.0) {
    const double r = std::cbrt((1.0 + b) / (1.0 - b));
    return {0.5 * r, 0.5 * r};
  }
  if (d == Direction::kAxis && b >= 3.0) {
    return {std::cbrt(1.0 / (b * b - 1.0)), 0.0};
  }
  throw DomainError("no closed-form saddles for beta = " + std::to_string(b) +
                    " on the " + std::string(to_string(d)));
}

std::vector<SaddlePoint> saddle_set(const Coefficients& c, Direction d) {
  const RealVec2 eta0 = saddle_shift(c, d);
  const double b = c.beta();
  std::vector<SaddlePoint> out;

  auto push_pair = [&](const RealVec2& xi, Complex phi, Complex det,
                       SaddleKind kind) {
    const ComplexVec2 plus = make_complex(xi, eta0);
    out.push_back({plus, phi, det, kind});
    out.push_back({conj_reflect(plus), std::conj(phi), std::conj(det), kind});
  };

  const Complex extra_det = 9.0 * std::polar(1.0, 2.0 * kPi / 3.0);
  if (d == Direction::kBisector) {
    const double r = std::cbrt((1.0 + b) / (1.0 - b));
    const double a = 0.5 * std::sqrt(3.0 - b) /
                     (std::pow(1.0 + b, 1.0 / 6.0) * std::cbrt(1.0 - b));
    const double det = 3.0 * (3.0 - b) * std::cbrt(1.0 + b) / std::cbrt(1.0 - b);
    push_pair({a, -a}, -0.75 * r, det, SaddleKind::kDominantPair);
    if (b == 0.0) {
      const double e = 0.5 * kSqrt3;
      push_pair({e, e}, Complex(-0.75, 0.75 * kSqrt3), extra_det,
                SaddleKind::kBifurcationExtraPair);
    }
  } else {
    const double m = std::cbrt(1.0 / (b * b - 1.0));
    push_pair({0.0, m * std::sqrt(b)}, -0.75 * m, 6.0 * b * m,
              SaddleKind::kDominantPair);
    if (b == 3.0) {
      push_pair({0.5 * kSqrt3, 0.0}, Complex(-0.375, 0.375 * kSqrt3),
                extra_det, SaddleKind::kBifurcationExtraPair);
    }
  }
  return out;
}

SaddleCheck check_saddle(const Coefficients& c, const RealVec2& x,
                         const SaddlePoint& sp) {
  const ComplexVec2 g = phase_gradient(c, x, sp.location);
  return {std::hypot(std::abs(g[0]), std::abs(g[1])),
          std::abs(phase(c, x, sp.location) - sp.phi_value),
          std::abs(phase_hessian_det(c, sp.location) - sp.hessian_det)};
}

Complex contribution(const SaddlePoint& sp, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("contribution requires lambda > 0");
  if (std::abs(sp.hessian_det) == 0.0) {
    throw DomainError("degenerate saddle: zero Hessian determinant");
  }
  return (2.0 * kPi / lambda) / std::sqrt(sp.hessian_det) *
         std::exp(lambda * sp.phi_value);
}

double pair_contribution(const SaddlePoint& plus_member, double lambda) {
  return 2.0 * contribution(plus_member, lambda).real();
}

RealVec2 optimal_shift(const Coefficients& c, const RealVec2& x) {
  if (x[0] == 0.0 && x[1] == 0.0) return {0.0, 0.0};
  const DualMaximizer m = dual_norm_maximizer(c, x);
  const RealVec2 e{std::cos(m.theta), std::sin(m.theta)};
  const double r =
      std::cbrt(dot(x, e) / (k_constant(c.q()) * eval_symbol(c, e)));
  return {r * e[0], r * e[1]};
}

// ---- models -------------------------------------------------------------------

std::string_view to_string(OscillationForm f) {
  switch (f) {
    case OscillationForm::kNone:
      return "none";
    case OscillationForm::kOnePlusCos:
      return "one_plus_cos";
    case OscillationForm::kCos:
      return "cos";
  }
  return "unknown";
}

namespace {

double oscillation_factor(OscillationForm form, double arg) {
  switch (form) {
    case OscillationForm::kNone:
      return 1.0;
    case OscillationForm::kOnePlusCos:
      return 1.0 + std::cos(arg);
    case OscillationForm::kCos:
      return std::cos(arg);
  }
  return 1.0;
}

}  // namespace

double AsymptoticEstimate::oscillation(double lambda) const {
  return oscillation_factor(oscillation_form,
                            oscillation_freq * lambda + oscillation_phase);
}

double AsymptoticEstimate::f_model(double lambda) const {
  return amplitude * std::pow(lambda, power) *
         std::exp(-exp_rate_lambda * lambda) * oscillation(lambda);
}

double AsymptoticEstimate::g_model(double t) const {
  const double u = std::pow(t, -1.0 / 3.0);
  return g_prefactor * u * std::exp(-g_rate * u) *
         oscillation_factor(oscillation_form, g_freq * u + oscillation_phase);
}

void AsymptoticEstimate::derive_g_space() {
  // (2 pi)^-2 (4t)^{-2/3} F((4t)^{-1/3}) with F ~ amplitude / lambda ...
  const double c4 = std::cbrt(0.25);
  g_prefactor = amplitude * c4 / (4.0 * kPi * kPi);
  g_rate = exp_rate_lambda * c4;
  g_freq = oscillation_freq * c4;
}

namespace {

// Model for the normalized operator with coupling b at the unit point of
// the supported direction.
AsymptoticEstimate unit_theorem2(double b, Direction d) {
  AsymptoticEstimate e;
  if (d == Direction::kBisector && b < 0.0) {
    e.exp_rate_lambda = 0.75 * std::cbrt((1.0 + b) / (1.0 - b));
    e.amplitude = 4.0 * kPi * std::pow(1.0 - b, 1.0 / 6.0) /
                  (kSqrt3 * std::sqrt(3.0 - b) * std::pow(1.0 + b, 1.0 / 6.0));
  } else if (d == Direction::kBisector && b == 0.0) {
    e.exp_rate_lambda = 0.75;
    e.amplitude = 4.0 * kPi / 3.0;
    e.oscillation_freq = 0.75 * kSqrt3;
    e.oscillation_phase = -kPi / 3.0;
    e.oscillation_form = OscillationForm::kOnePlusCos;
  } else if (d == Direction::kAxis && b == 3.0) {
    e.exp_rate_lambda = 0.375;
    e.amplitude = 4.0 * kPi / 3.0;
    e.oscillation_freq = 0.375 * kSqrt3;
    e.oscillation_phase = -kPi / 3.0;
    e.oscillation_form = OscillationForm::kOnePlusCos;
  } else if (d == Direction::kAxis && b > 3.0) {
    e.exp_rate_lambda = 0.75 * std::cbrt(1.0 / (b * b - 1.0));
    e.amplitude = 4.0 * kPi / std::sqrt(6.0 * b) *
                  std::pow(b * b - 1.0, 1.0 / 6.0);
  } else {
    throw DomainError("short-time model needs beta <= 0 on a bisector or "
                      "beta >= 3 on an axis");
  }
  return e;
}

}  // namespace

AsymptoticEstimate theorem2_estimate(const Coefficients& c, const RealVec2& x) {
  if (!is_finite(x) || (x[0] == 0.0 && x[1] == 0.0)) {
    throw DomainError("theorem2_estimate requires a finite x != 0");
  }
  // xi_1 = alpha^{-1/4} u_1, xi_2 = gamma^{-1/4} u_2 maps A to the
  // normalized symbol with beta = Q and x to xr.
  const RealVec2 xr{std::abs(x[0]) * std::pow(c.alpha(), -0.25),
                    std::abs(x[1]) * std::pow(c.gamma(), -0.25)};
  const double q = c.q();
  Direction d;
  double s;
  constexpr double kRayTol = 1e-12;
  if (q <= 0.0 && relative_equal(xr[0], xr[1], kRayTol)) {
    d = Direction::kBisector;
    s = 0.5 * (xr[0] + xr[1]);
  } else if (q >= 3.0 &&
             std::min(xr[0], xr[1]) <= kRayTol * std::max(xr[0], xr[1])) {
    d = Direction::kAxis;
    s = std::max(xr[0], xr[1]);
  } else {
    throw DomainError("x is not on a supported direction for Q = " +
                      std::to_string(q));
  }
  AsymptoticEstimate e = unit_theorem2(q, d);
  // F(lambda; s x) = s^{2/3} F(lambda s^{4/3}; x), times the Jacobian
  // (alpha gamma)^{-1/4} of the coordinate scaling.
  const double s43 = std::pow(s, 4.0 / 3.0);
  e.amplitude *= std::pow(c.alpha() * c.gamma(), -0.25) * std::pow(s, -2.0 / 3.0);
  e.exp_rate_lambda *= s43;
  e.oscillation_freq *= s43;
  e.derive_g_space();
  return e;
}

EpSaddle ep_saddle(const Coefficients& c, const RealVec2& x) {
  EpSaddle s;
  s.q = solve_q(c, x);
  s.a_of_q = eval_symbol(c, s.q);
  const Complex a(0.5 * kSqrt3, 0.5);
  s.location = {a * s.q[0], a * s.q[1]};
  s.hessian_det = phase_hessian_det(c, s.location);
  s.h = std::pow(std::abs(s.hessian_det), 0.75);
  return s;
}

AsymptoticEstimate ep_estimate(const Coefficients& c, const RealVec2& x) {
  const EpSaddle s = ep_saddle(c, x);
  if (std::abs(std::arg(s.hessian_det) - 2.0 * kPi / 3.0) > 1e-8) {
    throw DomainError("EP saddle: arg det phi'' differs from 2 pi / 3");
  }
  AsymptoticEstimate e;
  e.exp_rate_lambda = 0.375 * s.a_of_q;
  e.amplitude = 4.0 * kPi * std::pow(s.h, -2.0 / 3.0);
  e.oscillation_freq = 0.375 * kSqrt3 * s.a_of_q;
  e.oscillation_phase = -kPi / 3.0;
  e.oscillation_form = OscillationForm::kCos;
  e.derive_g_space();
  return e;
}

AsymptoticEstimate asymptotic_estimate(const Coefficients& c,
                                       const RealVec2& x) {
  const double q = c.q();
  if (q > 0.0 && q < 3.0) return ep_estimate(c, x);
  return theorem2_estimate(c, x);
}

// ---- equality locus --------------------------------------------------------------

EqualityLocusReport equality_locus_check(const Coefficients& c, Direction d,
                                         int grid_points) {
  const auto saddles = saddle_set(c, d);
  const double b = c.beta();
  EqualityLocusReport rep;
  rep.shift = saddle_shift(c, d);
  rep.height_offset = -eval_symbol(c, saddles.front().location).real();

  auto gap = [&](const RealVec2& xi) {
    return eval_symbol(c, make_complex(xi, rep.shift)).real() +
           rep.height_offset;
  };
  // Sum-of-squares forms of the gap on the two directions.
  auto closed_form = [&](const RealVec2& xi) {
    const double x1s = xi[0] * xi[0], x2s = xi[1] * xi[1];
    if (d == Direction::kBisector) {
      const double r = std::cbrt((1.0 + b) / (1.0 - b));
      const double cc = (3.0 - b) / (4.0 * std::cbrt(1.0 + b) *
                                     std::pow(1.0 - b, 2.0 / 3.0));
      const double s = xi[0] + xi[1];
      return -b * (x1s - x2s) * (x1s - x2s) +
             (b + 1.0) * ((x1s - cc) * (x1s - cc) + (x2s - cc) * (x2s - cc)) -
             b * r * r * s * s;
    }
    const double m2 = std::pow(b * b - 1.0, -2.0 / 3.0);
    const double u = x1s + x2s - b * m2;
    return u * u + 2.0 * (b - 1.0) * x1s * x2s + 2.0 * (b - 3.0) * m2 * x1s;
  };

  double extent = 0.0;
  for (const auto& sp : saddles) {
    rep.predicted_zeros.push_back({sp.location[0].real(), sp.location[1].real()});
    extent = std::max({extent, std::abs(sp.location[0].real()),
                       std::abs(sp.location[1].real())});
    rep.values_at_predicted.push_back(gap(rep.predicted_zeros.back()));
  }
  // Grid spacing chosen so no predicted zero is a grid node.
  const double half = 1.5 * extent + 0.5 + 1e-3;
  const int n = std::max(grid_points, 11);
  const double h = 2.0 * half / (n - 1);
  std::vector<double> values(static_cast<size_t>(n) * n);
  rep.grid_min = std::numeric_limits<double>::infinity();
  rep.closed_form_residual = 0.0;
  const double scale = 1.0 + rep.height_offset;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RealVec2 xi{-half + i * h, -half + j * h};
      const double v = gap(xi);
      values[static_cast<size_t>(i) * n + j] = v;
      rep.grid_min = std::min(rep.grid_min, v);
      rep.closed_form_residual = std::max(
          rep.closed_form_residual,
          std::abs(v - closed_form(xi)) / (1.0 + std::abs(v)));
    }
  }

  // Grid-local minima, refined by Newton on grad_xi Re A(xi + i eta0) = 0.
  auto refine = [&](RealVec2 xi) {
    for (int it = 0; it < 50; ++it) {
      const ComplexVec2 z = make_complex(xi, rep.shift);
      const ComplexVec2 g = symbol_gradient(c, z);
      const ComplexMat2 hs = symbol_hessian(c, z);
      const double g1 = g[0].real(), g2 = g[1].real();
      const double h11 = hs[0][0].real(), h12 = hs[0][1].real(),
                   h22 = hs[1][1].real();
      const double det = h11 * h22 - h12 * h12;
      RealVec2 step;
      if (det > 0.0 && h11 > 0.0) {
        step = {(h22 * g1 - h12 * g2) / det, (h11 * g2 - h12 * g1) / det};
      } else {
        step = {1e-2 * g1, 1e-2 * g2};
      }
      xi = {xi[0] - step[0], xi[1] - step[1]};
      if (norm(step) < 1e-15 * (1.0 + norm(xi))) break;
    }
    return xi;
  };
  for (int i = 1; i + 1 < n; ++i) {
    for (int j = 1; j + 1 < n; ++j) {
      const double v = values[static_cast<size_t>(i) * n + j];
      bool is_min = v < 1e-2 * scale;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && values[static_cast<size_t>(i + di) * n + j + dj] < v) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;
      const RealVec2 xi = refine({-half + i * h, -half + j * h});
      const bool duplicate = std::any_of(
          rep.located_minima.begin(), rep.located_minima.end(),
          [&](const RealVec2& p) {
            return std::hypot(p[0] - xi[0], p[1] - xi[1]) < 1e-6;
          });
      if (!duplicate) {
        rep.located_minima.push_back(xi);
        rep.located_values.push_back(gap(xi));
      }
    }
  }

  constexpr double kZeroTol = 1e-10;
  bool ok = rep.grid_min >= -kZeroTol * scale &&
            rep.closed_form_residual <= 1e-10;
  for (double v : rep.values_at_predicted) ok = ok && std::abs(v) <= kZeroTol * scale;
  size_t zero_minima = 0;
  for (size_t m = 0; m < rep.located_minima.size(); ++m) {
    if (rep.located_values[m] > 1e-8 * scale) continue;
    ++zero_minima;
    const auto& p = rep.located_minima[m];
    ok = ok && std::any_of(rep.predicted_zeros.begin(), rep.predicted_zeros.end(),
                           [&](const RealVec2& z) {
                             return std::hypot(p[0] - z[0], p[1] - z[1]) < 1e-6;
                           });
  }
  rep.ok = ok && zero_minima == rep.predicted_zeros.size();
  return rep;
}

}  // namespace qheat
