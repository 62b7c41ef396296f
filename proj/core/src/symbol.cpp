// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quartic_heat/errors.hpp"

namespace qheat {

double eval_symbol(const Coefficients& c, const RealVec2& xi) {
  const double s1 = xi[0] * xi[0];
  const double s2 = xi[1] * xi[1];
  return c.alpha() * s1 * s1 + 2.0 * c.beta() * s1 * s2 + c.gamma() * s2 * s2;
}

Complex eval_symbol(const Coefficients& c, const ComplexVec2& z) {
  const Complex s1 = z[0] * z[0];
  const Complex s2 = z[1] * z[1];
  return c.alpha() * s1 * s1 + 2.0 * c.beta() * s1 * s2 + c.gamma() * s2 * s2;
}

RealVec2 symbol_gradient(const Coefficients& c, const RealVec2& xi) {
  const double s1 = xi[0] * xi[0];
  const double s2 = xi[1] * xi[1];
  return {4.0 * xi[0] * (c.alpha() * s1 + c.beta() * s2),
          4.0 * xi[1] * (c.beta() * s1 + c.gamma() * s2)};
}

ComplexVec2 symbol_gradient(const Coefficients& c, const ComplexVec2& z) {
  const Complex s1 = z[0] * z[0];
  const Complex s2 = z[1] * z[1];
  return {4.0 * z[0] * (c.alpha() * s1 + c.beta() * s2),
          4.0 * z[1] * (c.beta() * s1 + c.gamma() * s2)};
}

ComplexMat2 symbol_hessian(const Coefficients& c, const ComplexVec2& z) {
  const Complex s1 = z[0] * z[0];
  const Complex s2 = z[1] * z[1];
  const Complex off = 8.0 * c.beta() * z[0] * z[1];
  return {{{12.0 * c.alpha() * s1 + 4.0 * c.beta() * s2, off},
           {off, 4.0 * c.beta() * s1 + 12.0 * c.gamma() * s2}}};
}

double real_part_expansion(const Coefficients& c, const RealVec2& xi,
                           const RealVec2& eta) {
  const double x1 = xi[0], x2 = xi[1], e1 = eta[0], e2 = eta[1];
  const double x1s = x1 * x1, x2s = x2 * x2, e1s = e1 * e1, e2s = e2 * e2;
  return c.alpha() * (x1s * x1s - 6.0 * x1s * e1s + e1s * e1s) +
         2.0 * c.beta() *
             (x1s * x2s - x1s * e2s - x2s * e1s - 4.0 * x1 * x2 * e1 * e2 +
              e1s * e2s) +
         c.gamma() * (x2s * x2s - 6.0 * x2s * e2s + e2s * e2s);
}

double ellipticity_constant(const Coefficients& c) {
  return std::min(1.0, 0.5 * (1.0 + c.q())) * std::min(c.alpha(), c.gamma());
}

Branch branch_of(double q) {
  if (q < 0.0) return Branch::kSubconvex;
  if (q <= 3.0) return Branch::kStronglyConvex;
  return Branch::kSuperconvex;
}

Regime classify(double q) {
  if (!(q > -1.0)) throw DomainError("Q <= -1 is not elliptic");
  Regime r{branch_of(q), std::nullopt};
  if (q == 0.0) r.on_boundary = BoundaryPoint::kQZero;
  if (q == 3.0) r.on_boundary = BoundaryPoint::kQThree;
  return r;
}

bool branch_admits(Branch branch, double q) {
  switch (branch) {
    case Branch::kSubconvex:
      return q > -1.0 && q <= 0.0;
    case Branch::kStronglyConvex:
      return q >= 0.0 && q <= 3.0;
    case Branch::kSuperconvex:
      return q >= 3.0;
  }
  return false;
}

namespace {

Branch resolve_branch(double q, std::optional<Branch> requested) {
  const Branch b = requested.value_or(branch_of(q));
  if (!branch_admits(b, q)) {
    throw DomainError(std::string("branch ") + std::string(to_string(b)) +
                      " does not admit Q = " + std::to_string(q));
  }
  return b;
}

}  // namespace

double k_constant(double q, Branch branch) {
  switch (resolve_branch(q, branch)) {
    case Branch::kSubconvex:
      return 8.0 * (1.0 - q) / ((1.0 + q) * (1.0 + q));
    case Branch::kStronglyConvex:
      return 8.0;
    case Branch::kSuperconvex:
      return q * q - 1.0;
  }
  return 0.0;
}

double k_constant(double q) {
  if (!(q > -1.0)) throw DomainError("Q <= -1 is not elliptic");
  return k_constant(q, branch_of(q));
}

double sigma_from_k(double k) { return 0.75 * std::cbrt(1.0 / (4.0 * k)); }

ConvexityData convexity_data(const Coefficients& c) {
  const double q = c.q();
  const double k = k_constant(q);
  return {q, classify(q), k, sigma_from_k(k)};
}

double Decomposition::reconstructed() const {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.value();
  return sum;
}

Decomposition lemma1_decomposition(const Coefficients& c, const RealVec2& xi,
                                   const RealVec2& eta,
                                   std::optional<Branch> branch) {
  const double q = c.q();
  const Branch b = resolve_branch(q, branch);
  const double k = k_constant(q, b);
  const double sa = std::sqrt(c.alpha());
  const double sg = std::sqrt(c.gamma());
  const double s4 = std::sqrt(sa * sg);
  const double x1 = xi[0], x2 = xi[1], e1 = eta[0], e2 = eta[1];

  const double a_eta = eval_symbol(c, eta);
  Decomposition d;
  d.branch = b;
  d.lhs = eval_symbol(c, make_complex(xi, eta)).real() + k * a_eta;
  d.scale = std::max({std::abs(d.lhs), k * a_eta, 1.0});

  switch (b) {
    case Branch::kSubconvex: {
      const double r = (3.0 - q) / (1.0 + q);
      d.terms = {
          {q + 1.0, sa * (x1 * x1 - r * e1 * e1)},
          {q + 1.0, sg * (x2 * x2 - r * e2 * e2)},
          {-q, sa * x1 * x1 - sg * x2 * x2},
          {-2.0 * q, sa * x1 * e1 + sg * x2 * e2},
          {-2.0 * q, s4 * (x1 * e2 + x2 * e1)},
          {-q * r * r, sa * e1 * e1 - sg * e2 * e2},
      };
      break;
    }
    case Branch::kStronglyConvex: {
      const double u1 = sa * (x1 * x1 - 3.0 * e1 * e1);
      const double u2 = sg * (x2 * x2 - 3.0 * e2 * e2);
      d.terms = {
          {q / 3.0, u1 + u2},
          {4.0 * q / 3.0, s4 * (x1 * x2 - 3.0 * e1 * e2)},
          {(3.0 - q) / 3.0, u1},
          {(3.0 - q) / 3.0, u2},
      };
      break;
    }
    case Branch::kSuperconvex: {
      const double s = (q + 3.0) / (q - 1.0);
      d.terms = {
          {2.0 * (q - 3.0), sa * x1 * e1 - sg * x2 * e2},
          {1.0, sa * (x1 * x1 - q * e1 * e1) + sg * (x2 * x2 - q * e2 * e2)},
          {2.0 * (q - 1.0), s4 * (x1 * x2 - s * e1 * e2)},
          {2.0 * (q - 3.0) * (q + 1.0) * (q * q + 3.0) / (q - 1.0),
           s4 * e1 * e2},
      };
      break;
    }
  }
  return d;
}

Complex gamma_form(const Coefficients& c, const ComplexGammaVector& p,
                   const ComplexGammaVector& w, std::optional<Branch> branch) {
  const double q = c.q();
  auto pq = [&](int i) { return p[i] * std::conj(w[i]); };
  switch (resolve_branch(q, branch)) {
    case Branch::kSubconvex: {
      const double r = (3.0 - q) / (1.0 + q);
      return (q + 1.0) * (pq(0) + pq(1)) - q * pq(2) - 2.0 * q * pq(3) -
             2.0 * q * pq(4) - q * r * r * pq(5);
    }
    case Branch::kStronglyConvex:
      return (3.0 - q) / 3.0 * (pq(0) + pq(1)) +
             q / 3.0 * (p[0] + p[1]) * std::conj(w[0] + w[1]) +
             4.0 * q / 3.0 * pq(2);
    case Branch::kSuperconvex:
      return 2.0 * (q - 3.0) * pq(0) + pq(1) + 2.0 * (q - 1.0) * pq(2) +
             2.0 * (q - 3.0) * (q + 1.0) * (q * q + 3.0) / (q - 1.0) * pq(3);
  }
  return 0.0;
}

double gamma_form(const Coefficients& c, const GammaVector& p,
                  std::optional<Branch> branch) {
  ComplexGammaVector z;
  std::copy(p.begin(), p.end(), z.begin());
  return gamma_form(c, z, z, branch).real();
}

GammaVector p_vector(const Coefficients& c, const RealVec2& xi,
                     const RealVec2& eta, std::optional<Branch> branch) {
  const double q = c.q();
  const double sa = std::sqrt(c.alpha());
  const double sg = std::sqrt(c.gamma());
  const double s4 = std::sqrt(sa * sg);
  const double x1 = xi[0], x2 = xi[1], e1 = eta[0], e2 = eta[1];
  switch (resolve_branch(q, branch)) {
    case Branch::kSubconvex: {
      const double r = (3.0 - q) / (1.0 + q);
      return {sa * (x1 * x1 - r * e1 * e1),
              sg * (x2 * x2 - r * e2 * e2),
              sa * x1 * x1 - sg * x2 * x2,
              sa * x1 * e1 + sg * x2 * e2,
              s4 * (x1 * e2 + x2 * e1),
              sa * e1 * e1 - sg * e2 * e2};
    }
    case Branch::kStronglyConvex:
      return {sa * (x1 * x1 - 3.0 * e1 * e1), sg * (x2 * x2 - 3.0 * e2 * e2),
              s4 * (x1 * x2 - 3.0 * e1 * e2), 0.0, 0.0, 0.0};
    case Branch::kSuperconvex: {
      const double s = (q + 3.0) / (q - 1.0);
      return {sa * x1 * e1 - sg * x2 * e2,
              sa * (x1 * x1 - q * e1 * e1) + sg * (x2 * x2 - q * e2 * e2),
              s4 * (x1 * x2 - s * e1 * e2),
              s4 * e1 * e2,
              0.0,
              0.0};
    }
  }
  return {};
}

double check_sg_identity(const Coefficients& c, const RealVec2& xi,
                         const RealVec2& eta, std::optional<Branch> branch) {
  const Branch b = resolve_branch(c.q(), branch);
  const double lhs = eval_symbol(c, make_complex(xi, eta)).real() +
                     k_constant(c.q(), b) * eval_symbol(c, eta);
  return std::abs(lhs - gamma_form(c, p_vector(c, xi, eta, b), b));
}

}  // namespace qheat
