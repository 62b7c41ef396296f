// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_SYMBOL_HPP
#define QUARTIC_HEAT_SYMBOL_HPP

#include <array>
#include <optional>
#include <vector>

#include "quartic_heat/types.hpp"

namespace qheat {

using ComplexMat2 = std::array<std::array<Complex, 2>, 2>;

// ---- evaluation ----------------------------------------------------------

double eval_symbol(const Coefficients& c, const RealVec2& xi);
Complex eval_symbol(const Coefficients& c, const ComplexVec2& z);

RealVec2 symbol_gradient(const Coefficients& c, const RealVec2& xi);
ComplexVec2 symbol_gradient(const Coefficients& c, const ComplexVec2& z);
ComplexMat2 symbol_hessian(const Coefficients& c, const ComplexVec2& z);

/// Re A(xi + i eta) from its explicit ten-term real expansion. Independent
/// of the complex evaluator; the two must agree to rounding.
double real_part_expansion(const Coefficients& c, const RealVec2& xi,
                           const RealVec2& eta);

/// c_ell with A(xi) >= c_ell |xi|^4, c_ell = min(1, (1+Q)/2) min(alpha, gamma).
double ellipticity_constant(const Coefficients& c);

// ---- regimes and sharp constants -----------------------------------------

Regime classify(double q);
Branch branch_of(double q);

/// True when the branch formula may be evaluated at this Q: the open branch
/// together with its closure point (Q = 0 for subconvex, Q = 3 for
/// superconvex).
bool branch_admits(Branch branch, double q);

/// k(Q) of the branch table. Throws DomainError if !branch_admits.
double k_constant(double q, Branch branch);
double k_constant(double q);
/// sigma = (3/4) (1 / (4k))^{1/3}.
double sigma_from_k(double k);

struct ConvexityData {
  double q;
  Regime regime;
  double k;
  double sigma;
};

ConvexityData convexity_data(const Coefficients& c);

// ---- Square decompositions -------------------------------------------------

/// weight * base^2; weights are signed, the sum over a decomposition is
/// nonnegative for any admissible branch.
struct SquareTerm {
  double weight;
  double base;
  double value() const { return weight * base * base; }
};

struct Decomposition {
  Branch branch;
  /// Re A(xi + i eta) + k A(eta), evaluated through the complex symbol.
  double lhs;
  std::vector<SquareTerm> terms;

  double reconstructed() const;
  /// Magnitude used for relative comparisons: max(|lhs|, k A(eta), 1).
  double scale;
};

Decomposition lemma1_decomposition(const Coefficients& c, const RealVec2& xi,
                                   const RealVec2& eta,
                                   std::optional<Branch> branch = std::nullopt);

// ---- Gamma form and p-vectors ---------------------------------------------

using GammaVector = std::array<double, 6>;
using ComplexGammaVector = std::array<Complex, 6>;

/// Sesquilinear Gamma(p, q): each |p_k|^2 of the quadratic form becomes
/// p_k conj(q_k).
Complex gamma_form(const Coefficients& c, const ComplexGammaVector& p,
                   const ComplexGammaVector& q,
                   std::optional<Branch> branch = std::nullopt);
double gamma_form(const Coefficients& c, const GammaVector& p,
                  std::optional<Branch> branch = std::nullopt);

GammaVector p_vector(const Coefficients& c, const RealVec2& xi,
                     const RealVec2& eta,
                     std::optional<Branch> branch = std::nullopt);

/// |(Re A(xi + i eta) + k A(eta)) - Gamma(p, p)| with p = p_vector(xi, eta).
double check_sg_identity(const Coefficients& c, const RealVec2& xi,
                         const RealVec2& eta,
                         std::optional<Branch> branch = std::nullopt);

}  // namespace qheat

#endif  // QUARTIC_HEAT_SYMBOL_HPP
