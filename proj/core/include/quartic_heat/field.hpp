// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_FIELD_HPP
#define QUARTIC_HEAT_FIELD_HPP

#include <array>
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/types.hpp"

namespace qheat {

struct FieldSample {
  RealVec2 location;
  double alpha;
  double beta;
  double gamma;
};

/// A sampled coefficient field. Samples are stored raw; ellipticity is
/// checked by analyze_field so the offending location can be reported.
class CoefficientField {
 public:
  /// Throws DomainError on an empty sample list.
  static CoefficientField from_samples(std::vector<FieldSample> samples);

  /// CSV with a header naming the columns x1, x2, alpha, beta, gamma (any
  /// order, extra columns ignored). Blank lines and lines starting with '#'
  /// are skipped. Throws DomainError on malformed input or zero rows.
  static CoefficientField from_csv(std::istream& in);
  static CoefficientField from_csv_file(const std::string& path);

  /// Named families sampled on an n x n grid of [0,1]^2:
  ///   "constant"  params (alpha, beta, gamma)
  ///   "q_ramp"    params (q_min, q_max): alpha = gamma = 1 and beta
  ///               linear in x1 from q_min to q_max
  ///   "anisotropic" params (q): alpha = 1 + x1, gamma = 2 - x2,
  ///               beta = q sqrt(alpha gamma)
  static CoefficientField preset(std::string_view name,
                                 std::span<const double> params, int n);

  const std::vector<FieldSample>& samples() const { return samples_; }
  size_t size() const { return samples_.size(); }

 private:
  explicit CoefficientField(std::vector<FieldSample> s) : samples_(std::move(s)) {}
  std::vector<FieldSample> samples_;
};

/// Raised for a sample with alpha <= 0, gamma <= 0 or Q <= -1.
class NonEllipticSample : public DomainError {
 public:
  NonEllipticSample(const std::string& what, size_t index, RealVec2 location)
      : DomainError(what), index_(index), location_(location) {}
  size_t index() const { return index_; }
  RealVec2 location() const { return location_; }

 private:
  size_t index_;
  RealVec2 location_;
};

struct FieldReport {
  double k_star;
  double sigma_star;
  double q_min;
  double q_max;
  /// Sample counts indexed by Branch.
  std::array<size_t, 3> regime_histogram;
  size_t boundary_samples;
  size_t sample_count;
  /// Location where k* is first attained.
  RealVec2 k_star_location;
};

FieldReport analyze_field(const CoefficientField& f);

struct GaussianFit {
  /// Fitted r in ln|G| + ln(t)/3 = const - r d0(x)^{4/3} t^{-1/3}.
  double rate;
  /// sigma(Q) of the coefficients.
  double expected;
  double relative_error;
  /// Smallest and largest t entering the fit.
  std::array<double, 2> t_range;
  size_t points;
};

/// Least-squares fit of the Gaussian rate from the oracle kernel over the
/// eligible t of the sweep. For oscillating models only t where the model
/// oscillation factor is within 10% of its maximum are eligible. Throws
/// DomainError if fewer than two t qualify and ToleranceError if the oracle
/// fails at a fitted point.
GaussianFit gaussian_bound_check(const Coefficients& c, const RealVec2& x,
                                 std::span<const double> t_sweep);

/// t = 1/(4 lambda^3) at the oscillation peaks of the model with lambda in
/// [lambda_min, lambda_max]. Non-oscillating models get `uniform_points`
/// equally spaced lambda instead.
std::vector<double> peak_times(const Coefficients& c, const RealVec2& x,
                               double lambda_min, double lambda_max,
                               int uniform_points = 2);

}  // namespace qheat

#endif  // QUARTIC_HEAT_FIELD_HPP
