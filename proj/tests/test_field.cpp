// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/field.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat {
namespace {

TEST(Field, ConstantPreset) {
  const double p[] = {1.0, 3.0, 1.0};
  const FieldReport r = analyze_field(CoefficientField::preset("constant", p, 4));
  EXPECT_EQ(r.k_star, 8.0);
  EXPECT_NEAR(r.sigma_star, 3.0 / (8.0 * std::cbrt(4.0)), 1e-15);
  EXPECT_EQ(r.sample_count, 16u);
  EXPECT_EQ(r.regime_histogram[1], 16u);
  EXPECT_EQ(r.boundary_samples, 16u);
}

TEST(Field, RampAcrossAllBranches) {
  const double p[] = {-0.5, 4.0};
  const FieldReport r = analyze_field(CoefficientField::preset("q_ramp", p, 10));
  EXPECT_EQ(r.k_star, 48.0);
  EXPECT_NEAR(r.sigma_star, 0.75 * std::cbrt(1.0 / 192.0), 1e-15);
  EXPECT_NEAR(r.sigma_star, 0.130005, 1e-6);
  EXPECT_EQ(r.q_min, -0.5);
  EXPECT_EQ(r.q_max, 4.0);
  EXPECT_EQ(r.k_star_location[0], 0.0);
  EXPECT_EQ(r.regime_histogram[0] + r.regime_histogram[1] + r.regime_histogram[2], r.sample_count);
  EXPECT_GT(r.regime_histogram[0], 0u);
  EXPECT_GT(r.regime_histogram[2], 0u);
}

TEST(Field, ClosedStronglyConvexRange) {
  const double p[] = {0.0, 3.0};
  EXPECT_EQ(analyze_field(CoefficientField::preset("q_ramp", p, 7)).k_star, 8.0);
  const double q[] = {1.2};
  EXPECT_EQ(analyze_field(CoefficientField::preset("anisotropic", q, 5)).k_star, 8.0);
}

TEST(Field, CsvParsing) {
  std::istringstream in(
      "# comment\n"
      "beta,x1,x2,gamma,alpha,extra\n"
      "-0.5,0,0,1,1,foo_ignored_but_numeric_not_required\n"
      "4, 1.5 ,2,1,1,x\n");
  const auto f = CoefficientField::from_csv(in);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.samples()[1].location[0], 1.5);
  const FieldReport r = analyze_field(f);
  EXPECT_EQ(r.k_star, 48.0);
  EXPECT_EQ(r.regime_histogram[0], 1u);
  EXPECT_EQ(r.regime_histogram[2], 1u);
}

TEST(Field, CsvErrors) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return CoefficientField::from_csv(in);
  };
  EXPECT_THROW(parse(""), DomainError);
  EXPECT_THROW(parse("x1,x2,alpha,beta,gamma\n"), DomainError);
  EXPECT_THROW(parse("x1,x2,alpha,beta\n0,0,1,0\n"), DomainError);
  EXPECT_THROW(parse("x1,x2,alpha,beta,gamma\n0,0,1,zero,1\n"), DomainError);
  EXPECT_THROW(parse("x1,x2,alpha,beta,gamma\n0,0,1,0\n"), DomainError);
  EXPECT_THROW(CoefficientField::from_csv_file("/nonexistent/field.csv"), DomainError);
}

TEST(Field, NonEllipticSampleReportsLocation) {
  const auto f = CoefficientField::from_samples(
      {{{0.0, 0.0}, 1.0, 0.0, 1.0}, {{0.25, 0.75}, 1.0, -1.5, 1.0}});
  try {
    analyze_field(f);
    FAIL() << "expected NonEllipticSample";
  } catch (const NonEllipticSample& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_EQ(e.location()[0], 0.25);
    EXPECT_EQ(e.location()[1], 0.75);
    EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos);
  }
  EXPECT_THROW(CoefficientField::from_samples({}), DomainError);
}

TEST(Field, RandomInvariants) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double sigma_max = 3.0 * std::cbrt(2.0) / 16.0;
  std::vector<FieldSample> samples;
  double prev_k = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double a = std::exp(u(rng) - 0.5), g = std::exp(u(rng) - 0.5);
    const double q = -0.99 + 9.99 * u(rng);
    samples.push_back({{u(rng), u(rng)}, a, q * std::sqrt(a * g), g});
    const FieldReport r = analyze_field(CoefficientField::from_samples(samples));
    EXPECT_GE(r.k_star, prev_k);
    prev_k = r.k_star;
    EXPECT_LE(r.sigma_star, sigma_max * (1.0 + 1e-15));
    EXPECT_EQ(r.sigma_star, sigma_from_k(r.k_star));
    EXPECT_EQ(r.regime_histogram[0] + r.regime_histogram[1] + r.regime_histogram[2],
              samples.size());
  }
}

TEST(GaussianFit, BetaFourAxis) {
  const Coefficients c = Coefficients::normalized(4.0);
  // The kernel carries a slowly decaying oscillating correction with a
  // lambda-period near 10, so the window spans several periods.
  const std::vector<double> ts = peak_times(c, {1.0, 0.0}, 10.0, 60.0, 51);
  ASSERT_EQ(ts.size(), 51u);
  const GaussianFit fit = gaussian_bound_check(c, {1.0, 0.0}, ts);
  EXPECT_EQ(fit.points, 51u);
  EXPECT_NEAR(fit.expected, 3.0 * std::pow(4.0, -4.0 / 3.0) * std::cbrt(1.0 / 15.0), 1e-15);
  EXPECT_LE(fit.relative_error, 0.03);
}

TEST(GaussianFit, BetaZeroPeaks) {
  const Coefficients c = Coefficients::normalized(0.0);
  const std::vector<double> ts = peak_times(c, {1.0, 1.0}, 10.0, 60.0);
  ASSERT_GE(ts.size(), 4u);
  const GaussianFit fit = gaussian_bound_check(c, {1.0, 1.0}, ts);
  EXPECT_LE(fit.relative_error, 0.03);
  // Cosine minima only: nothing qualifies.
  std::vector<double> minima;
  for (int k = 1; k <= 2; ++k) {
    const double lambda = (2.0 * kPi * k - kPi + kPi / 3.0) / (0.75 * std::sqrt(3.0));
    minima.push_back(1.0 / (4.0 * lambda * lambda * lambda));
  }
  EXPECT_THROW(gaussian_bound_check(c, {1.0, 1.0}, minima), DomainError);
}

}  // namespace
}  // namespace qheat
