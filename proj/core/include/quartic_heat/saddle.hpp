// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_SADDLE_HPP
#define QUARTIC_HEAT_SADDLE_HPP

#include <string_view>
#include <vector>

#include "quartic_heat/symbol.hpp"
#include "quartic_heat/types.hpp"

namespace qheat {

// Phase phi(z) = i x.z - A(z)/4 of F(lambda) = int exp(lambda phi(xi)) dxi.
Complex phase(const Coefficients& c, const RealVec2& x, const ComplexVec2& z);
ComplexVec2 phase_gradient(const Coefficients& c, const RealVec2& x,
                           const ComplexVec2& z);
ComplexMat2 phase_hessian(const Coefficients& c, const ComplexVec2& z);
Complex phase_hessian_det(const Coefficients& c, const ComplexVec2& z);

/// Special directions of the short-time analysis: the coordinate axis
/// x = (1, 0) and the main bisector x = (1, 1).
enum class Direction { kAxis, kBisector };

std::string_view to_string(Direction d);
RealVec2 unit_point(Direction d);

enum class SaddleKind { kDominantPair, kBifurcationExtraPair };

struct SaddlePoint {
  ComplexVec2 location;
  Complex phi_value;
  Complex hessian_det;
  SaddleKind kind;
};

/// Contributing saddle points of phi for normalized coefficients
/// (alpha = gamma = 1) with beta <= 0 on the bisector or beta >= 3 on the
/// axis. Members are ordered (z0+, z0-, [z*+, z*-]); the extra pair exists
/// only at beta = 0 and beta = 3. phi_value and hessian_det are the closed
/// forms. Throws DomainError for other (beta, direction) combinations.
std::vector<SaddlePoint> saddle_set(const Coefficients& c, Direction d);

/// Shift eta0 with R^2 + i eta0 passing through the contributing saddles.
RealVec2 saddle_shift(const Coefficients& c, Direction d);

/// Discrepancies between a closed-form saddle and direct evaluation.
struct SaddleCheck {
  double gradient_residual;  ///< |grad phi(location)|
  double phi_mismatch;       ///< |phi(location) - phi_value|
  double det_mismatch;       ///< |det phi''(location) - hessian_det|
};

SaddleCheck check_saddle(const Coefficients& c, const RealVec2& x,
                         const SaddlePoint& sp);

/// (2 pi / lambda) det^{-1/2} exp(lambda phi), principal square root.
/// Throws DomainError for a degenerate Hessian or lambda <= 0.
Complex contribution(const SaddlePoint& sp, double lambda);
/// Sum over a conjugate pair: 2 Re contribution(+ member).
double pair_contribution(const SaddlePoint& plus_member, double lambda);

/// Shift minimizing the square-decomposition bound of the contour height,
///   max_xi Re phi(xi + i eta) <= -x.eta + (k/4) A(eta).
/// The minimizer is eta0 = r e* where e* maximizes the dual-norm quotient
/// and r = (x.e* / (k A(e*)))^{1/3}. It reproduces the closed-form shifts
/// on the special directions and q/2 in the strongly convex case.
RealVec2 optimal_shift(const Coefficients& c, const RealVec2& x);

// ---- asymptotic models ---------------------------------------------------

enum class OscillationForm { kNone, kOnePlusCos, kCos };

std::string_view to_string(OscillationForm f);

/// F(lambda) ~ amplitude lambda^power exp(-exp_rate_lambda lambda) osc(lambda)
/// with osc = 1, 1 + cos(B lambda + C) or cos(B lambda + C).
/// G-space counterpart through G(x,t) = (2 pi)^-2 (4t)^{-2/3} F((4t)^{-1/3}):
/// G ~ g_prefactor t^{-1/3} exp(-g_rate t^{-1/3}) osc(g_freq t^{-1/3} + C).
struct AsymptoticEstimate {
  double exp_rate_lambda = 0.0;
  double power = -1.0;
  double amplitude = 0.0;
  double oscillation_freq = 0.0;
  double oscillation_phase = 0.0;
  OscillationForm oscillation_form = OscillationForm::kNone;

  double g_prefactor = 0.0;
  double g_rate = 0.0;
  double g_freq = 0.0;

  double oscillation(double lambda) const;
  double f_model(double lambda) const;
  double g_model(double t) const;
  /// Fills the G-space fields from the F-space ones.
  void derive_g_space();
};

/// Closed-form short-time model for beta <= 0 on a bisector or beta >= 3
/// on an axis. General alpha, gamma reduce to the normalized operator by
/// xi_j -> alpha^{-1/4} xi_1, gamma^{-1/4} xi_2; x may be any point on the
/// supported ray, the scale s entering through G(sx,t) = G(x,t/s^4)/s^2.
AsymptoticEstimate theorem2_estimate(const Coefficients& c, const RealVec2& x);

/// Strongly convex model (0 < Q < 3, any x != 0) built from the saddles
/// z*+- = (+-sqrt(3)/2 + i/2) q(x). Throws DomainError if arg det phi''(z*+)
/// deviates from 2 pi / 3 by more than 1e-8.
AsymptoticEstimate ep_estimate(const Coefficients& c, const RealVec2& x);

/// Data of the EP saddle at z*+ = (sqrt(3)/2 + i/2) q.
struct EpSaddle {
  RealVec2 q;
  double a_of_q;
  ComplexVec2 location;
  Complex hessian_det;
  double h;  ///< |det|^{3/4}
};
EpSaddle ep_saddle(const Coefficients& c, const RealVec2& x);

/// Dispatch: theorem2_estimate on supported rays, ep_estimate for 0<Q<3.
AsymptoticEstimate asymptotic_estimate(const Coefficients& c,
                                       const RealVec2& x);

// ---- equality locus ---------------------------------------------------------

struct EqualityLocusReport {
  RealVec2 shift;
  double height_offset;  ///< -Re A(z0+), added so the gap vanishes at saddles
  double grid_min;
  std::vector<RealVec2> predicted_zeros;
  std::vector<double> values_at_predicted;
  /// Local minima of the gap found on the grid and refined by Newton.
  std::vector<RealVec2> located_minima;
  std::vector<double> located_values;
  /// Max difference between the closed-form sum-of-squares expression and
  /// the direct evaluation over the grid.
  double closed_form_residual;
  bool ok;
};

/// Checks Re A(xi + i eta0) - Re A(z0+) >= 0 on a xi-grid with zeros exactly
/// at the real parts of the contributing saddles.
EqualityLocusReport equality_locus_check(const Coefficients& c, Direction d,
                                         int grid_points = 401);

}  // namespace qheat

#endif  // QUARTIC_HEAT_SADDLE_HPP
