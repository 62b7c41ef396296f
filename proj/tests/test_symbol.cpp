// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat {
namespace {

TEST(Coefficients, RejectsNonElliptic) {
  EXPECT_THROW(Coefficients::make(0.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(Coefficients::make(1.0, 0.0, -1.0), DomainError);
  EXPECT_THROW(Coefficients::make(1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(Coefficients::make(1.0, -2.0, 1.0), DomainError);
  EXPECT_THROW(Coefficients::make(NAN, 0.0, 1.0), DomainError);
  EXPECT_NO_THROW(Coefficients::make(4.0, -1.99, 1.0));
  EXPECT_DOUBLE_EQ(Coefficients::make(4.0, -1.0, 1.0).q(), -0.5);
}

TEST(Symbol, RealValues) {
  EXPECT_EQ(eval_symbol(Coefficients::normalized(0.0), RealVec2{1.0, 2.0}), 17.0);
  EXPECT_EQ(eval_symbol(Coefficients::normalized(0.7), RealVec2{1.0, 1.0}), 2.0 + 1.4);
  EXPECT_EQ(eval_symbol(Coefficients::normalized(3.0), RealVec2{1.0, 0.0}), 1.0);
}

TEST(Symbol, ComplexValues) {
  const Complex i(0.0, 1.0);
  EXPECT_EQ(eval_symbol(Coefficients::normalized(0.0), ComplexVec2{i, 0.0}), Complex(1.0, 0.0));
  const Complex v = eval_symbol(Coefficients::normalized(1.0), ComplexVec2{1.0 + i, 0.0});
  EXPECT_NEAR(v.real(), -4.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  const Coefficients c = Coefficients::make(1.3, 0.4, 0.8);
  const RealVec2 xi{0.3, -1.1};
  EXPECT_EQ(eval_symbol(c, make_complex(xi, {0.0, 0.0})).real(), eval_symbol(c, xi));
}

TEST(Symbol, RealPartExpansion) {
  const Coefficients c1 = Coefficients::normalized(1.0);
  EXPECT_DOUBLE_EQ(real_part_expansion(c1, {1.0, 0.0}, {1.0, 0.0}), -4.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const Coefficients c = Coefficients::make(1.0 + 0.1 * u(rng), 0.35 * u(rng), 1.0 + 0.1 * u(rng));
    const RealVec2 xi{u(rng), u(rng)}, eta{u(rng), u(rng)};
    const double direct = eval_symbol(c, make_complex(xi, eta)).real();
    const double scale = 1.0 + eval_symbol(c, xi) + eval_symbol(c, eta);
    EXPECT_NEAR(real_part_expansion(c, xi, eta), direct, 1e-13 * scale);
    EXPECT_NEAR(real_part_expansion(c, xi, {0.0, 0.0}), eval_symbol(c, xi), 1e-13 * scale);
    EXPECT_NEAR(real_part_expansion(c, {0.0, 0.0}, eta), eval_symbol(c, eta), 1e-13 * scale);
  }
}

TEST(Symbol, EllipticityLowerBound) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::exp(u(rng)), g = std::exp(u(rng));
    const double q = -0.99 + 5.5 * (u(rng) + 1.0);
    const Coefficients c = Coefficients::make(a, q * std::sqrt(a * g), g);
    const RealVec2 xi{u(rng), u(rng)};
    const double r2 = dot(xi, xi);
    EXPECT_GE(eval_symbol(c, xi), ellipticity_constant(c) * r2 * r2 * (1.0 - 1e-14));
  }
}

TEST(Convexity, Table) {
  const auto d3 = convexity_data(Coefficients::normalized(3.0));
  EXPECT_EQ(d3.k, 8.0);
  EXPECT_EQ(d3.regime.branch, Branch::kStronglyConvex);
  EXPECT_EQ(d3.regime.on_boundary, BoundaryPoint::kQThree);
  EXPECT_NEAR(d3.sigma, 3.0 / (8.0 * std::cbrt(4.0)), 1e-15);
  EXPECT_NEAR(d3.sigma, 0.236235, 1e-6);

  const auto d4 = convexity_data(Coefficients::normalized(4.0));
  EXPECT_EQ(d4.k, 15.0);
  EXPECT_EQ(d4.regime.branch, Branch::kSuperconvex);
  EXPECT_NEAR(d4.sigma, 3.0 * std::pow(4.0, -4.0 / 3.0) * std::cbrt(1.0 / 15.0), 1e-15);
  EXPECT_NEAR(d4.sigma, 0.191577, 1e-6);

  const auto dm = convexity_data(Coefficients::make(4.0, -1.0, 1.0));
  EXPECT_DOUBLE_EQ(dm.q, -0.5);
  EXPECT_DOUBLE_EQ(dm.k, 48.0);
  EXPECT_EQ(dm.regime.branch, Branch::kSubconvex);

  const auto d0 = convexity_data(Coefficients::normalized(0.0));
  EXPECT_EQ(d0.regime.branch, Branch::kStronglyConvex);
  EXPECT_EQ(d0.regime.on_boundary, BoundaryPoint::kQZero);
  EXPECT_FALSE(convexity_data(Coefficients::normalized(1.0)).regime.on_boundary);
}

TEST(Convexity, ContinuityAtBoundaries) {
  EXPECT_EQ(k_constant(0.0, Branch::kSubconvex), 8.0);
  EXPECT_EQ(k_constant(0.0, Branch::kStronglyConvex), 8.0);
  EXPECT_EQ(k_constant(3.0, Branch::kSuperconvex), 8.0);
  EXPECT_EQ(k_constant(3.0, Branch::kStronglyConvex), 8.0);
  EXPECT_NEAR(k_constant(-1e-9), 8.0, 1e-6);
  EXPECT_NEAR(k_constant(3.0 + 1e-9), 8.0, 1e-6);
  EXPECT_THROW(k_constant(1.0, Branch::kSuperconvex), DomainError);
  EXPECT_THROW(k_constant(0.5, Branch::kSubconvex), DomainError);
  EXPECT_THROW(k_constant(-1.0), DomainError);
}

TEST(SquareDecomposition, HandExamples) {
  const auto d = lemma1_decomposition(Coefficients::normalized(1.0), {1.0, 0.0}, {1.0, 0.0});
  EXPECT_EQ(d.branch, Branch::kStronglyConvex);
  EXPECT_DOUBLE_EQ(d.lhs, 4.0);
  ASSERT_EQ(d.terms.size(), 4u);
  EXPECT_NEAR(d.terms[0].value(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(d.terms[1].value(), 0.0, 1e-15);
  EXPECT_NEAR(d.terms[2].value() + d.terms[3].value(), 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(d.reconstructed(), 4.0, 1e-14);

  const auto z = lemma1_decomposition(Coefficients::normalized(-0.3), {0.0, 0.0}, {0.0, 0.0});
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.reconstructed(), 0.0);

  // Equality point of the superconvex bound at beta = 4.
  const double m = std::cbrt(1.0 / 15.0);
  const auto e = lemma1_decomposition(Coefficients::normalized(4.0), {0.0, 2.0 * m}, {m, 0.0});
  EXPECT_NEAR(e.lhs, 0.0, 1e-14);
  EXPECT_NEAR(e.reconstructed(), 0.0, 1e-14);
}

TEST(SquareDecomposition, RandomReconstruction) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 30000; ++i) {
    const double a = std::exp(3.0 * u(rng) - 1.5), g = std::exp(3.0 * u(rng) - 1.5);
    const double q = -0.99 + 10.99 * u(rng);
    const Coefficients c = Coefficients::make(a, q * std::sqrt(a * g), g);
    const RealVec2 xi{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
    const RealVec2 eta{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
    const auto d = lemma1_decomposition(c, xi, eta);
    ASSERT_LE(std::abs(d.lhs - d.reconstructed()), 1e-12 * d.scale) << "Q=" << q;
    ASSERT_GE(d.lhs, -1e-10 * d.scale);
    for (const auto& t : d.terms) ASSERT_TRUE(std::isfinite(t.value()));
  }
}

TEST(GammaForm, Examples) {
  const Coefficients c3 = Coefficients::normalized(3.0);
  EXPECT_DOUBLE_EQ(gamma_form(c3, GammaVector{1, 1, 0, 0, 0, 0}), 4.0);
  EXPECT_EQ(gamma_form(Coefficients::normalized(-0.4), GammaVector{}), 0.0);
  EXPECT_EQ(gamma_form(Coefficients::normalized(5.0), GammaVector{}), 0.0);
}

TEST(GammaForm, HermitianAndSemidefinite) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double q : {-0.9, -0.5, 0.0, 0.5, 2.0, 3.0, 3.5, 8.0}) {
    const Coefficients c = Coefficients::normalized(q);
    for (int i = 0; i < 500; ++i) {
      ComplexGammaVector p, w;
      for (int k = 0; k < 6; ++k) {
        p[k] = {u(rng), u(rng)};
        w[k] = {u(rng), u(rng)};
      }
      const Complex pw = gamma_form(c, p, w), wp = gamma_form(c, w, p);
      EXPECT_NEAR(std::abs(pw - std::conj(wp)), 0.0, 1e-12 * (1.0 + std::abs(pw)));
      const Complex pp = gamma_form(c, p, p);
      EXPECT_GE(pp.real(), -1e-12);
      EXPECT_NEAR(pp.imag(), 0.0, 1e-12 * (1.0 + std::abs(pp)));
    }
  }
}

TEST(PVector, Examples) {
  const GammaVector p0 = p_vector(Coefficients::normalized(0.0), {1.0, 0.0}, {0.0, 0.0});
  EXPECT_EQ(p0, (GammaVector{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(p_vector(Coefficients::normalized(-0.5), {0.0, 0.0}, {0.0, 0.0}), GammaVector{});
  const GammaVector p4 = p_vector(Coefficients::normalized(4.0), {1.0, 1.0}, {1.0, 0.0});
  EXPECT_EQ(p4, (GammaVector{1, -2, 1, 0, 0, 0}));
}

TEST(SgIdentity, AllRegimesAndBoundaries) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (double q : {-0.95, -0.5, -0.1, 0.0, 0.7, 2.9, 3.0, 3.2, 6.0, 10.0}) {
    const double a = 1.7, g = 0.6;
    const Coefficients c = Coefficients::make(a, q * std::sqrt(a * g), g);
    for (int i = 0; i < 1000; ++i) {
      const RealVec2 xi{u(rng), u(rng)}, eta{u(rng), u(rng)};
      const double scale = lemma1_decomposition(c, xi, eta).scale;
      EXPECT_LE(check_sg_identity(c, xi, eta), 1e-10 * scale);
      if (q == 0.0) {
        EXPECT_LE(check_sg_identity(c, xi, eta, Branch::kSubconvex), 1e-10 * scale);
      }
      if (q == 3.0) {
        EXPECT_LE(check_sg_identity(c, xi, eta, Branch::kSuperconvex), 1e-10 * scale);
      }
    }
  }
  EXPECT_EQ(check_sg_identity(Coefficients::normalized(2.0), {0, 0}, {0, 0}), 0.0);
}

TEST(Symbol, Homogeneity) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Coefficients c = Coefficients::make(1.2, 2.5, 0.7);
  for (int i = 0; i < 1000; ++i) {
    const RealVec2 xi{u(rng), u(rng)};
    const double lam = u(rng);
    const double a = eval_symbol(c, xi);
    EXPECT_NEAR(eval_symbol(c, RealVec2{lam * xi[0], lam * xi[1]}),
                lam * lam * lam * lam * a, 1e-14 * (1.0 + a));
  }
}

}  // namespace
}  // namespace qheat
