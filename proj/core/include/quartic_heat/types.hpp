// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_TYPES_HPP
#define QUARTIC_HEAT_TYPES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string_view>

namespace qheat {

using Complex = std::complex<double>;

/// Frequency or space variable in the real plane.
using RealVec2 = std::array<double, 2>;
/// Point of C^2, written z = xi + i*eta.
using ComplexVec2 = std::array<Complex, 2>;

inline constexpr double kPi = 3.14159265358979323846;

inline double dot(const RealVec2& a, const RealVec2& b) {
  return a[0] * b[0] + a[1] * b[1];
}
inline double norm(const RealVec2& a) { return std::hypot(a[0], a[1]); }
inline bool is_finite(const RealVec2& a) {
  return std::isfinite(a[0]) && std::isfinite(a[1]);
}
inline ComplexVec2 make_complex(const RealVec2& re, const RealVec2& im) {
  return {Complex(re[0], im[0]), Complex(re[1], im[1])};
}

/// Coefficients (alpha, beta, gamma) of the symbol
///   A(xi) = alpha xi1^4 + 2 beta xi1^2 xi2^2 + gamma xi2^4.
/// Construction enforces uniform ellipticity: alpha, gamma > 0 and
/// Q = beta / sqrt(alpha gamma) > -1.
class Coefficients {
 public:
  /// Throws DomainError if the triple is not elliptic or not finite.
  static Coefficients make(double alpha, double beta, double gamma);
  /// alpha = gamma = 1, the normalized operator of the short-time analysis.
  static Coefficients normalized(double beta) { return make(1.0, beta, 1.0); }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  /// Q = beta / sqrt(alpha gamma).
  double q() const noexcept { return q_; }
  bool is_normalized() const noexcept { return alpha_ == 1.0 && gamma_ == 1.0; }

 private:
  Coefficients(double alpha, double beta, double gamma, double q)
      : alpha_(alpha), beta_(beta), gamma_(gamma), q_(q) {}

  double alpha_;
  double beta_;
  double gamma_;
  double q_;
};

/// The three branches of the convexity case split.
enum class Branch { kSubconvex, kStronglyConvex, kSuperconvex };

/// Q = 0 and Q = 3 belong to the closed strongly convex branch; they are
/// flagged because the adjacent open branches agree there.
enum class BoundaryPoint { kQZero, kQThree };

struct Regime {
  Branch branch;
  std::optional<BoundaryPoint> on_boundary;

  friend bool operator==(const Regime&, const Regime&) = default;
};

std::string_view to_string(Branch branch);

}  // namespace qheat

#endif  // QUARTIC_HEAT_TYPES_HPP
