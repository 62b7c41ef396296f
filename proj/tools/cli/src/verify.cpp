// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/finsler.hpp"
#include "quartic_heat/quadrature.hpp"
#include "quartic_heat/saddle.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat::cli {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_counterexample = describe();
  }

  // Runs f, recording an unexpected exception as a failure.
  void guarded(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, [&] { return what + ": " + e.what(); });
    }
  }

  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

struct Sampler {
  std::mt19937_64 rng;

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  RealVec2 vec(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  // Coefficients with Q uniform in [q_lo, q_hi] and log-uniform alpha, gamma.
  Coefficients coeffs(double q_lo, double q_hi) {
    const double a = std::exp(uniform(std::log(0.2), std::log(5.0)));
    const double g = std::exp(uniform(std::log(0.2), std::log(5.0)));
    return Coefficients::make(a, uniform(q_lo, q_hi) * std::sqrt(a * g), g);
  }
};

std::string describe(const Coefficients& c, const RealVec2& xi,
                     const RealVec2& eta, double residual) {
  std::ostringstream s;
  s.precision(17);
  s << "alpha=" << c.alpha() << " beta=" << c.beta() << " gamma=" << c.gamma()
    << " xi=(" << xi[0] << "," << xi[1] << ") eta=(" << eta[0] << "," << eta[1]
    << ") residual=" << residual;
  return s.str();
}

size_t count(double base, const VerifyOptions& opt) {
  return std::max<size_t>(1, static_cast<size_t>(base * opt.sample_factor));
}

}  // namespace

SuiteResult verify_identities(const VerifyOptions& opt) {
  Checker ck("identities");
  Sampler s{std::mt19937_64(opt.seed)};
  const double tol = opt.identity_tol;
  for (size_t i = 0; i < count(20000, opt); ++i) {
    const Coefficients c = s.coeffs(-0.99, 10.0);
    const RealVec2 xi = s.vec(2.0), eta = s.vec(2.0);
    const Decomposition d = lemma1_decomposition(c, xi, eta);
    const double rel = std::abs(d.lhs - d.reconstructed()) / d.scale;
    ck.expect(rel <= tol, [&] { return "decomposition: " + describe(c, xi, eta, rel); });
    ck.expect(d.lhs >= -tol * d.scale,
              [&] { return "lower bound: " + describe(c, xi, eta, d.lhs); });
    const double sg = check_sg_identity(c, xi, eta) / d.scale;
    ck.expect(sg <= tol, [&] { return "S = Gamma(p,p): " + describe(c, xi, eta, sg); });
    const double e1 = std::abs(real_part_expansion(c, xi, eta) -
                               eval_symbol(c, make_complex(xi, eta)).real()) /
                      d.scale;
    ck.expect(e1 <= tol, [&] { return "real expansion: " + describe(c, xi, eta, e1); });
    const double lam = s.uniform(0.1, 3.0);
    const double a1 = eval_symbol(c, xi);
    const double a2 = eval_symbol(c, RealVec2{lam * xi[0], lam * xi[1]});
    const double sc = std::abs(a2 - std::pow(lam, 4) * a1) / (1.0 + std::abs(a2));
    ck.expect(sc <= 1e-13, [&] { return "homogeneity: " + describe(c, xi, eta, sc); });
  }
  // Boundary points evaluated from both adjacent branches.
  for (double q : {0.0, 3.0}) {
    const Branch other = q == 0.0 ? Branch::kSubconvex : Branch::kSuperconvex;
    ck.expect(k_constant(q, other) == k_constant(q, Branch::kStronglyConvex),
              [&] { return "k continuity at Q=" + std::to_string(q); });
    for (size_t i = 0; i < count(2000, opt); ++i) {
      // Powers of two with an even exponent sum keep Q exactly on the boundary.
      const int ea = static_cast<int>(s.uniform(-3.0, 4.0));
      const int eg = ea + 2 * static_cast<int>(s.uniform(-1.0, 2.0));
      const double a = std::ldexp(1.0, ea), g = std::ldexp(1.0, eg);
      const Coefficients c = Coefficients::make(a, q * std::ldexp(1.0, (ea + eg) / 2), g);
      const RealVec2 xi = s.vec(2.0), eta = s.vec(2.0);
      for (Branch b : {other, Branch::kStronglyConvex}) {
        const Decomposition d = lemma1_decomposition(c, xi, eta, b);
        const double r = check_sg_identity(c, xi, eta, b) / d.scale;
        ck.expect(r <= tol, [&] {
          return "boundary branch " + std::string(to_string(b)) + ": " +
                 describe(c, xi, eta, r);
        });
      }
    }
  }
  // Gamma is positive semidefinite and Hermitian.
  for (size_t i = 0; i < count(5000, opt); ++i) {
    const Coefficients c = s.coeffs(-0.99, 10.0);
    ComplexGammaVector p, q;
    GammaVector pr;
    for (int k = 0; k < 6; ++k) {
      p[k] = Complex(s.uniform(-1, 1), s.uniform(-1, 1));
      q[k] = Complex(s.uniform(-1, 1), s.uniform(-1, 1));
      pr[k] = s.uniform(-1, 1);
    }
    const Complex gpq = gamma_form(c, p, q), gqp = gamma_form(c, q, p);
    const Complex gpp = gamma_form(c, p, p);
    const double mag = 1.0 + std::abs(gpq) + std::abs(c.q()) * std::abs(c.q()) * 100.0;
    ck.expect(std::abs(gpq - std::conj(gqp)) <= 1e-12 * mag,
              [&] { return "Gamma Hermitian: Q=" + std::to_string(c.q()); });
    ck.expect(gpp.real() >= -1e-12 * mag && std::abs(gpp.imag()) <= 1e-12 * mag,
              [&] { return "Gamma(p,p) >= 0: Q=" + std::to_string(c.q()); });
    ck.expect(gamma_form(c, pr) >= -1e-12 * mag,
              [&] { return "real Gamma >= 0: Q=" + std::to_string(c.q()); });
  }
  return ck.result();
}

SuiteResult verify_finsler(const VerifyOptions& opt) {
  Checker ck("finsler");
  Sampler s{std::mt19937_64(opt.seed + 1)};
  for (size_t i = 0; i < count(300, opt); ++i) {
    ck.guarded("finsler sample", [&] {
      const Coefficients c = s.coeffs(-0.99, 10.0);
      const RealVec2 x = s.vec(3.0), y = s.vec(3.0);
      const double lam = s.uniform(-4.0, 4.0);
      const double px = dual_norm(c, x);
      const double plx = dual_norm(c, {lam * x[0], lam * x[1]});
      ck.expect(std::abs(plx - std::abs(lam) * px) <= 1e-10 * std::abs(lam) * px, [&] {
        return "homogeneity: " + describe(c, x, y, plx - std::abs(lam) * px);
      });
      const double bound = dot(x, x) / quasi_norm(c, x);
      ck.expect(px >= bound * (1.0 - 1e-12),
                [&] { return "duality inequality: " + describe(c, x, y, px - bound); });
      const RealVec2 mid{0.5 * (x[0] + y[0]), 0.5 * (x[1] + y[1])};
      const double gap = dual_norm(c, mid) - 0.5 * (px + dual_norm(c, y));
      ck.expect(gap <= 1e-9, [&] { return "convexity: " + describe(c, x, y, gap); });
    });
  }
  // Equality in the duality inequality only on multiples of pi/4: the axes
  // for beta >= 0, the diagonals for beta <= 3 (alpha = gamma = 1; at
  // beta = 1 every direction is extremal).
  auto extremal = [](double beta, int k) { return k % 2 == 0 ? beta >= 0.0 : beta <= 3.0; };
  for (size_t i = 0; i < count(100, opt); ++i) {
    double beta = s.uniform(-0.95, 8.0);
    if (std::abs(beta - 1.0) < 0.05) beta += 0.1;
    const Coefficients c = Coefficients::normalized(beta);
    const int k = static_cast<int>(s.uniform(0.0, 8.0));
    const double r = s.uniform(0.2, 3.0);
    const double on = k * kPi / 4.0;
    const double off = on + s.uniform(0.05, kPi / 4.0 - 0.05);
    for (double ang : {on, off}) {
      const RealVec2 x{r * std::cos(ang), r * std::sin(ang)};
      const double ratio = dual_norm(c, x) / (dot(x, x) / quasi_norm(c, x)) - 1.0;
      const bool equality = ratio <= 1e-9;
      ck.expect(equality == (ang == on && extremal(beta, k)), [&] {
        return "equality directions: beta=" + std::to_string(beta) +
               " angle=" + std::to_string(ang) + " ratio-1=" + std::to_string(ratio);
      });
    }
    for (int j = 0; j < 8; ++j) {
      const auto da = direction_stationarity(c, j * kPi / 4.0);
      ck.expect(std::abs(da.g_prime) <= 1e-12 && da.is_equality_direction == extremal(beta, j),
                [&] {
                  return "g'(k pi/4): beta=" + std::to_string(beta) + " k=" + std::to_string(j);
                });
    }
  }
  for (size_t i = 0; i < count(200, opt); ++i) {
    ck.guarded("q solver", [&] {
      const Coefficients c = s.coeffs(0.02, 2.98);
      RealVec2 x = s.vec(3.0);
      if (norm(x) < 1e-3) x[0] += 0.5;
      const RealVec2 q = solve_q(c, x);
      const RealVec2 g = symbol_gradient(c, q);
      const double res = std::hypot(0.25 * g[0] - x[0], 0.25 * g[1] - x[1]);
      ck.expect(res <= 1e-12 * norm(x),
                [&] { return "solve_q residual: " + describe(c, x, q, res); });
      const double aq = check_aq_distance(c, x);
      ck.expect(aq <= 1e-8, [&] { return "A(q) = p*^{4/3}: " + describe(c, x, q, aq); });
    });
  }
  return ck.result();
}

SuiteResult verify_quadrature(const VerifyOptions& opt) {
  Checker ck("quadrature");
  Sampler s{std::mt19937_64(opt.seed + 2)};
  ck.guarded("quadrature", [&] {
    const Coefficients c0 = Coefficients::normalized(0.0);
    const double g1 = std::tgamma(1.25) / kPi;
    const KernelValue g = green_function(c0, {0.0, 0.0}, 1.0);
    ck.expect(g.ok() && std::abs(g.value / (g1 * g1) - 1.0) <= 1e-8,
              [&] { return "Gamma anchor: G=" + std::to_string(g.value); });
    for (size_t i = 0; i < count(5, opt); ++i) {
      const RealVec2 x = s.vec(1.5);
      const double t = std::exp(s.uniform(std::log(0.01), std::log(2.0)));
      const double a = kernel_1d(x[0], t).value, b = kernel_1d(x[1], t).value;
      const double gv = green_function(c0, x, t).value;
      const double rel = std::abs(gv - a * b) / std::abs(a * b);
      ck.expect(rel <= 1e-8, [&] { return "separability: " + describe(c0, x, {t, 0}, rel); });
    }
    for (size_t i = 0; i < count(4, opt); ++i) {
      const Coefficients c = s.coeffs(-0.9, 6.0);
      const RealVec2 x = s.vec(1.0);
      const double t = s.uniform(0.05, 1.0);
      const double g0 = green_function(c, x, t).value;
      const double gm = green_function(c, {-x[0], -x[1]}, t).value;
      ck.expect(std::abs(g0 - gm) <= 1e-8 * std::abs(g0) + 1e-14,
                [&] { return "G(x) = G(-x): " + describe(c, x, {t, 0}, g0 - gm); });
      const double sc = s.uniform(0.5, 2.0);
      const double lhs = green_function(c, {sc * x[0], sc * x[1]}, t).value;
      const double rhs = green_function(c, x, t / std::pow(sc, 4)).value / (sc * sc);
      ck.expect(std::abs(lhs - rhs) <= 1e-7 * std::abs(rhs) + 1e-14,
                [&] { return "scaling law: " + describe(c, x, {t, sc}, lhs - rhs); });
    }
    for (double beta : {-0.5, 0.0, 3.0, 4.0}) {
      const Coefficients c = Coefficients::normalized(beta);
      const RealVec2 x = beta <= 0.0 ? RealVec2{1.0, 1.0} : RealVec2{1.0, 0.0};
      const double lambda = 4.0;
      const double d = f_lambda_direct(c, x, lambda).value;
      const double sh = f_lambda_shifted(c, x, lambda, optimal_shift(c, x)).value;
      ck.expect(std::abs(d - sh) <= 1e-6 * std::abs(d), [&] {
        return "contour invariance: beta=" + std::to_string(beta) +
               " direct=" + std::to_string(d) + " shifted=" + std::to_string(sh);
      });
    }
  });
  return ck.result();
}

SuiteResult verify_saddles(const VerifyOptions& opt) {
  Checker ck("saddles");
  Sampler s{std::mt19937_64(opt.seed + 3)};
  const std::vector<std::pair<double, Direction>> cases = {
      {-0.9, Direction::kBisector}, {-0.5, Direction::kBisector},
      {0.0, Direction::kBisector},  {3.0, Direction::kAxis},
      {4.0, Direction::kAxis},      {9.0, Direction::kAxis}};
  for (const auto& [beta, d] : cases) {
    ck.guarded("saddle set", [&] {
      const Coefficients c = Coefficients::normalized(beta);
      const RealVec2 x = unit_point(d);
      const auto set = saddle_set(c, d);
      const size_t want = (beta == 0.0 || beta == 3.0) ? 4 : 2;
      ck.expect(set.size() == want,
                [&] { return "cardinality at beta=" + std::to_string(beta); });
      for (size_t i = 0; i < set.size(); ++i) {
        const SaddleCheck chk = check_saddle(c, x, set[i]);
        ck.expect(chk.gradient_residual <= 1e-12 && chk.phi_mismatch <= 1e-10 &&
                      chk.det_mismatch <= 1e-10 * std::abs(set[i].hessian_det),
                  [&] {
                    return "saddle " + std::to_string(i) + " at beta=" +
                           std::to_string(beta) + " grad=" +
                           std::to_string(chk.gradient_residual);
                  });
        if (i % 2 == 0) {
          ck.expect(set[i + 1].phi_value == std::conj(set[i].phi_value), [&] {
            return "pair conjugacy at beta=" + std::to_string(beta);
          });
          const double lambda = s.uniform(5.0, 25.0);
          const Complex sum = contribution(set[i], lambda) + contribution(set[i + 1], lambda);
          ck.expect(std::abs(sum.imag()) <= 1e-12 * std::abs(sum) + 1e-300, [&] {
            return "real pair sum at beta=" + std::to_string(beta);
          });
        }
      }
      const EqualityLocusReport rep = equality_locus_check(c, d, 201);
      ck.expect(rep.ok, [&] {
        return "equality locus at beta=" + std::to_string(beta) +
               " grid_min=" + std::to_string(rep.grid_min);
      });
    });
  }
  for (size_t i = 0; i < count(50, opt); ++i) {
    ck.guarded("EP saddle", [&] {
      const Coefficients c = s.coeffs(0.05, 2.95);
      RealVec2 x = s.vec(2.0);
      if (norm(x) < 1e-3) x[1] += 0.5;
      const EpSaddle ep = ep_saddle(c, x);
      const double arg_err = std::abs(std::arg(ep.hessian_det) - 2.0 * kPi / 3.0);
      ck.expect(arg_err <= 1e-8, [&] { return "EP arg det: " + describe(c, x, ep.q, arg_err); });
      const ComplexVec2 g = phase_gradient(c, x, ep.location);
      const double res = std::hypot(std::abs(g[0]), std::abs(g[1]));
      ck.expect(res <= 1e-11 * (1.0 + norm(x)),
                [&] { return "EP critical point: " + describe(c, x, ep.q, res); });
    });
  }
  return ck.result();
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  const bool all = which == "all";
  if (!all && which != "identities" && which != "finsler" &&
      which != "quadrature" && which != "saddles") {
    throw DomainError("unknown suite " + which);
  }
  if (all || which == "identities") out.push_back(verify_identities(opt));
  if (all || which == "finsler") out.push_back(verify_finsler(opt));
  if (all || which == "quadrature") out.push_back(verify_quadrature(opt));
  if (all || which == "saddles") out.push_back(verify_saddles(opt));
  return out;
}

}  // namespace qheat::cli
