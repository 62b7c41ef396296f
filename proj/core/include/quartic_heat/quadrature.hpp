// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_QUADRATURE_HPP
#define QUARTIC_HEAT_QUADRATURE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "quartic_heat/types.hpp"

namespace qheat {

/// Tensor Gauss-Legendre panels on [-R, R]^2, optionally on R^2 + i eta.
/// Zero entries mean "choose automatically".
struct QuadratureSpec {
  double truncation_radius = 0.0;
  /// Even and >= 2. When 0 the count starts from the oscillation bound and
  /// doubles until the tolerance is met.
  int panels_per_axis = 0;
  int nodes_per_panel = 8;
  /// Contour shift in the variables of the integral being computed. Unset
  /// means the default shift of the method.
  std::optional<RealVec2> contour_shift;
  double target_rel_tol = 1e-8;
  int max_nodes_per_axis = 2048;
  /// 0 = hardware concurrency. Results do not depend on this value.
  int threads = 0;
};

enum class Method { kDirect, kShifted };
enum class MethodPolicy { kAuto, kDirect, kShifted };
enum class QuadratureStatus { kOk, kToleranceNotMet, kCancellationDominated };

std::string_view to_string(Method m);
std::string_view to_string(QuadratureStatus s);

struct KernelValue {
  double value = 0.0;
  /// Refinement difference + discarded imaginary part + rounding floor.
  double estimated_error = 0.0;
  Method method = Method::kDirect;
  QuadratureStatus status = QuadratureStatus::kOk;

  double imag_residue = 0.0;
  /// Sum of |weight * integrand|; mass / |value| measures cancellation.
  double mass = 0.0;
  double truncation_radius = 0.0;
  int panels_per_axis = 0;
  RealVec2 shift{0.0, 0.0};

  bool ok() const { return status == QuadratureStatus::kOk; }
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// int_{R^2} exp(i a.(xi + i eta) - tau A(xi + i eta)) dxi. The common
/// kernel behind every routine below.
KernelValue shifted_fourier_integral(const Coefficients& c, const RealVec2& a,
                                     double tau, const RealVec2& eta,
                                     const QuadratureSpec& spec);

/// F(lambda) = int exp(lambda (i x.xi - A(xi)/4)) dxi on the real plane.
KernelValue f_lambda_direct(const Coefficients& c, const RealVec2& x,
                            double lambda, const QuadratureSpec& spec = {});

/// The same integral over R^2 + i eta0.
KernelValue f_lambda_shifted(const Coefficients& c, const RealVec2& x,
                             double lambda, const RealVec2& eta0,
                             const QuadratureSpec& spec = {});

/// Direct for lambda <= 8, shifted (through optimal_shift unless
/// spec.contour_shift is set) above.
KernelValue f_lambda(const Coefficients& c, const RealVec2& x, double lambda,
                     const QuadratureSpec& spec = {},
                     MethodPolicy policy = MethodPolicy::kAuto);

/// Shift lambda * optimal_shift(x) of the G integral, the image of the F
/// shift under xi = lambda zeta with lambda = (4t)^{-1/3}.
RealVec2 default_green_shift(const Coefficients& c, const RealVec2& x,
                             double t);

/// G(x, t) = (2 pi)^-2 int exp(i x.xi - t A(xi)) dxi. The automatic policy
/// applies the F rule to the equivalent argument (4t)^{-1/3} p*(x)^{4/3}.
KernelValue green_function(const Coefficients& c, const RealVec2& x, double t,
                           const QuadratureSpec& spec = {},
                           MethodPolicy policy = MethodPolicy::kAuto);

/// (2 pi)^-1 int exp(i xi x - t xi^4) dxi on the 1D contour
/// Im xi = (1/2) sign(x) (|x| / 4t)^{1/3}.
KernelValue kernel_1d(double x, double t, const QuadratureSpec& spec = {});

}  // namespace qheat

#endif  // QUARTIC_HEAT_QUADRATURE_HPP
