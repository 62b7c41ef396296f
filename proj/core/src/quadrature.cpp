// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include <boost/math/special_functions/legendre.hpp>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/finsler.hpp"
#include "quartic_heat/saddle.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Extra e-folds on the truncation: the tail is compared with the envelope
// maximum, and the answer may sit this far below it.
constexpr double kTailMargin = 20.0;
constexpr double kCancellationRatio = 1e12;
constexpr double kDirectLambdaMax = 8.0;
// Relative accuracy is measured against max(|value|, kZeroFloor * mass) so
// that zero crossings of oscillating kernels do not stall refinement.
constexpr double kZeroFloor = 1e-6;

struct Partial {
  Complex sum;
  double mass;
};

Partial operator+(const Partial& a, const Partial& b) {
  return {a.sum + b.sum, a.mass + b.mass};
}

// Pairwise summation in a fixed tree order.
Partial pairwise(const std::vector<Partial>& v, size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  if (hi - lo == 0) return {0.0, 0.0};
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

template <class RowFn>
Partial reduce_rows(size_t rows, int threads, RowFn&& row) {
  std::vector<Partial> partial(rows);
  size_t workers = threads > 0 ? static_cast<size_t>(threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, rows);
  if (workers <= 1) {
    for (size_t i = 0; i < rows; ++i) partial[i] = row(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < rows; i += workers) partial[i] = row(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return pairwise(partial, 0, rows);
}

// Nodes and weights of a panelized rule on [-r, r].
struct AxisRule {
  std::vector<double> x;
  std::vector<double> w;
};

AxisRule panel_rule(double r, int panels, int nodes) {
  const GaussRule& g = gauss_legendre(nodes);
  AxisRule a;
  a.x.reserve(static_cast<size_t>(panels) * nodes);
  a.w.reserve(a.x.capacity());
  const double h = 2.0 * r / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = -r + (p + 0.5) * h;
    for (int k = 0; k < nodes; ++k) {
      a.x.push_back(mid + 0.5 * h * g.nodes[k]);
      a.w.push_back(0.5 * h * g.weights[k]);
    }
  }
  return a;
}

// Smallest R with tau c |xi|^4 - tau C2 |eta|^2 |xi|^2 >= budget, the
// lower bound Re A(xi + i eta) >= c |xi|^4 - C2 |xi|^2 |eta|^2 driving the
// tail below exp(-budget) relative to the envelope maximum.
double tail_radius(double tau, double c_ell, double c2_eta2, double budget) {
  const double b = tau * c2_eta2;
  const double u =
      (b + std::sqrt(b * b + 4.0 * tau * c_ell * std::max(budget, 1.0))) /
      (2.0 * tau * c_ell);
  return std::sqrt(u);
}

int even_at_least(double v, int lo) {
  int n = static_cast<int>(std::ceil(v));
  n = std::max(n, lo);
  return n + (n & 1);
}

struct RawIntegral {
  Complex value;
  double mass;
};

// Exponent e(xi) = i a.z - tau A(z) at z = xi + i eta. Per-axis parts are
// precomputed; only the cross term is formed per point.
struct Exponent2D {
  const Coefficients& c;
  RealVec2 a;
  double tau;
  RealVec2 eta;

  struct Axis {
    std::vector<Complex> u;   // i a_j z_j - tau coef z_j^4
    std::vector<Complex> sq;  // z_j^2
    std::vector<double> w;
  };

  Axis axis(const AxisRule& r, int j) const {
    const double coef = j == 0 ? c.alpha() : c.gamma();
    Axis ax;
    ax.u.resize(r.x.size());
    ax.sq.resize(r.x.size());
    ax.w = r.w;
    for (size_t k = 0; k < r.x.size(); ++k) {
      const Complex z(r.x[k], eta[j]);
      const Complex s = z * z;
      ax.sq[k] = s;
      ax.u[k] = Complex(0.0, a[j]) * z - tau * coef * s * s;
    }
    return ax;
  }

  double cross() const { return -2.0 * tau * c.beta(); }
};

RawIntegral integrate_2d(const Exponent2D& e, double r, int panels, int nodes,
                         double shift_log, int threads) {
  const AxisRule rule = panel_rule(r, panels, nodes);
  const auto ax1 = e.axis(rule, 0);
  const auto ax2 = e.axis(rule, 1);
  const double cross = e.cross();
  const size_t n = rule.x.size();
  const Partial total = reduce_rows(n, threads, [&](size_t i) {
    Complex row(0.0, 0.0);
    double mass = 0.0;
    const Complex ui = ax1.u[i] - shift_log;
    const Complex si = cross * ax1.sq[i];
    for (size_t j = 0; j < n; ++j) {
      const Complex ex = ui + ax2.u[j] + si * ax2.sq[j];
      const double m = ax2.w[j] * std::exp(ex.real());
      row += m * Complex(std::cos(ex.imag()), std::sin(ex.imag()));
      mass += m;
    }
    return Partial{ax1.w[i] * row, ax1.w[i] * mass};
  });
  return {total.sum, total.mass};
}

// Maximum of Re e over a coarse grid; used as the envelope scale.
double envelope_log_max(const Exponent2D& e, double r) {
  constexpr int kGrid = 65;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const RealVec2 xi{-r + 2.0 * r * i / (kGrid - 1),
                        -r + 2.0 * r * j / (kGrid - 1)};
      const ComplexVec2 z = make_complex(xi, e.eta);
      const double re = -(e.a[0] * e.eta[0] + e.a[1] * e.eta[1]) -
                        e.tau * eval_symbol(e.c, z).real();
      best = std::max(best, re);
    }
  }
  return best;
}

bool accurate(double err, double value, double mass, double tol) {
  return err <= tol * std::max(std::abs(value), kZeroFloor * mass);
}

// Shared refinement driver. `eval(panels)` integrates with the given panel
// count and returns the raw value scaled by exp(-shift_log).
template <class Eval>
KernelValue refine(Eval&& eval, int start_panels, bool adaptive, int nodes,
                   const QuadratureSpec& spec, double shift_log) {
  int panels = std::max(start_panels, 2);
  RawIntegral coarse = eval(panels / 2);
  RawIntegral fine = eval(panels);
  auto error_of = [&](const RawIntegral& f, const RawIntegral& co) {
    return std::abs(f.value.real() - co.value.real()) + std::abs(f.value.imag()) +
           8.0 * kEps * f.mass;
  };
  double err = error_of(fine, coarse);
  while (adaptive &&
         !accurate(err, fine.value.real(), fine.mass, spec.target_rel_tol) &&
         2 * panels * nodes <= spec.max_nodes_per_axis) {
    panels *= 2;
    coarse = fine;
    fine = eval(panels);
    err = error_of(fine, coarse);
  }
  const double scale = std::exp(shift_log);
  KernelValue kv;
  kv.value = fine.value.real() * scale;
  kv.imag_residue = std::abs(fine.value.imag()) * scale;
  kv.estimated_error = err * scale;
  kv.mass = fine.mass * scale;
  kv.panels_per_axis = panels;
  if (kv.mass > kCancellationRatio * std::abs(kv.value)) {
    kv.status = QuadratureStatus::kCancellationDominated;
  } else if (!accurate(kv.estimated_error, kv.value, kv.mass,
                       spec.target_rel_tol)) {
    kv.status = QuadratureStatus::kToleranceNotMet;
  }
  return kv;
}

void validate_spec(const QuadratureSpec& spec) {
  if (!(spec.target_rel_tol > 0.0) || spec.nodes_per_panel < 1 ||
      spec.panels_per_axis < 0 || spec.truncation_radius < 0.0 ||
      (spec.panels_per_axis > 0 && spec.panels_per_axis % 2 != 0) ||
      spec.max_nodes_per_axis < 2 * spec.nodes_per_panel) {
    throw DomainError("invalid quadrature spec");
  }
  if (spec.contour_shift && !is_finite(*spec.contour_shift)) {
    throw DomainError("contour shift must be finite");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::kDirect ? "direct" : "shifted";
}

std::string_view to_string(QuadratureStatus s) {
  switch (s) {
    case QuadratureStatus::kOk:
      return "ok";
    case QuadratureStatus::kToleranceNotMet:
      return "tolerance_not_met";
    case QuadratureStatus::kCancellationDominated:
      return "cancellation_dominated";
  }
  return "unknown";
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 64) throw DomainError("Gauss-Legendre order out of range");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Boost returns the nonnegative zeros in ascending order.
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
  GaussRule g;
  auto weight = [n](double x) {
    const double d = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * d * d);
  };
  for (auto z = zeros.rbegin(); z != zeros.rend(); ++z) {
    if (*z == 0.0) continue;
    g.nodes.push_back(-*z);
    g.weights.push_back(weight(*z));
  }
  for (double z : zeros) {
    g.nodes.push_back(z);
    g.weights.push_back(weight(z));
  }
  return cache.emplace(n, std::move(g)).first->second;
}

KernelValue shifted_fourier_integral(const Coefficients& c, const RealVec2& a,
                                     double tau, const RealVec2& eta,
                                     const QuadratureSpec& spec) {
  validate_spec(spec);
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be > 0");
  if (!is_finite(a) || !is_finite(eta)) throw DomainError("non-finite input");

  const double c_ell = ellipticity_constant(c);
  const double c2 = 6.0 * std::max(c.alpha(), c.gamma()) + 6.0 * std::abs(c.beta());
  const double eta2 = dot(eta, eta);
  const double budget = std::log(1.0 / spec.target_rel_tol) + kTailMargin;

  const Exponent2D e{c, a, tau, eta};
  const double probe = tail_radius(tau, c_ell, c2 * eta2, budget);
  const double log_max = envelope_log_max(e, probe);
  double r = spec.truncation_radius;
  if (r == 0.0) {
    r = tail_radius(tau, c_ell, c2 * eta2, budget + log_max + dot(a, eta));
  }

  // Panel width <= pi / (2 (|a| + (4 tau)^{1/4})): a quarter of the
  // oscillation wavelength plus the envelope width.
  const double width = kPi / (2.0 * (norm(a) + std::pow(4.0 * tau, 0.25)));
  const bool adaptive = spec.panels_per_axis == 0;
  const int start = adaptive ? even_at_least(2.0 * r / width, 4)
                             : spec.panels_per_axis;
  const int nodes = spec.nodes_per_panel;

  KernelValue kv = refine(
      [&](int panels) {
        return integrate_2d(e, r, panels, nodes, log_max, spec.threads);
      },
      start, adaptive, nodes, spec, log_max);
  kv.truncation_radius = r;
  kv.shift = eta;
  kv.method = (eta[0] == 0.0 && eta[1] == 0.0) ? Method::kDirect
                                                : Method::kShifted;
  return kv;
}

KernelValue f_lambda_direct(const Coefficients& c, const RealVec2& x,
                            double lambda, const QuadratureSpec& spec) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  KernelValue kv = shifted_fourier_integral(
      c, {lambda * x[0], lambda * x[1]}, 0.25 * lambda, {0.0, 0.0}, spec);
  kv.method = Method::kDirect;
  return kv;
}

KernelValue f_lambda_shifted(const Coefficients& c, const RealVec2& x,
                             double lambda, const RealVec2& eta0,
                             const QuadratureSpec& spec) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  KernelValue kv = shifted_fourier_integral(
      c, {lambda * x[0], lambda * x[1]}, 0.25 * lambda, eta0, spec);
  kv.method = Method::kShifted;
  return kv;
}

KernelValue f_lambda(const Coefficients& c, const RealVec2& x, double lambda,
                     const QuadratureSpec& spec, MethodPolicy policy) {
  const bool direct = policy == MethodPolicy::kDirect ||
                      (policy == MethodPolicy::kAuto && lambda <= kDirectLambdaMax);
  if (direct) return f_lambda_direct(c, x, lambda, spec);
  const RealVec2 eta = spec.contour_shift.value_or(optimal_shift(c, x));
  return f_lambda_shifted(c, x, lambda, eta, spec);
}

RealVec2 default_green_shift(const Coefficients& c, const RealVec2& x,
                             double t) {
  const double lambda = std::cbrt(1.0 / (4.0 * t));
  const RealVec2 eta = optimal_shift(c, x);
  return {lambda * eta[0], lambda * eta[1]};
}

KernelValue green_function(const Coefficients& c, const RealVec2& x, double t,
                           const QuadratureSpec& spec, MethodPolicy policy) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be > 0");
  if (!is_finite(x)) throw DomainError("x must be finite");
  bool direct = policy == MethodPolicy::kDirect;
  if (policy == MethodPolicy::kAuto) {
    const double equivalent =
        std::cbrt(1.0 / (4.0 * t)) * std::pow(dual_norm(c, x), 4.0 / 3.0);
    direct = equivalent <= kDirectLambdaMax;
  }
  RealVec2 eta{0.0, 0.0};
  if (!direct) eta = spec.contour_shift.value_or(default_green_shift(c, x, t));
  KernelValue kv = shifted_fourier_integral(c, x, t, eta, spec);
  kv.method = direct ? Method::kDirect : Method::kShifted;
  const double norm2 = 1.0 / (4.0 * kPi * kPi);
  kv.value *= norm2;
  kv.estimated_error *= norm2;
  kv.imag_residue *= norm2;
  kv.mass *= norm2;
  return kv;
}

KernelValue kernel_1d(double x, double t, const QuadratureSpec& spec) {
  validate_spec(spec);
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(x)) {
    throw DomainError("kernel_1d requires finite x and t > 0");
  }
  const double eta = spec.contour_shift
                         ? (*spec.contour_shift)[0]
                         : 0.5 * std::copysign(std::cbrt(std::abs(x) / (4.0 * t)), x);
  // exp(i x z - t z^4), z = xi + i eta; Re z^4 >= xi^4 - 6 xi^2 eta^2.
  auto exponent = [&](double xi) {
    const Complex z(xi, eta);
    const Complex s = z * z;
    return Complex(0.0, x) * z - t * s * s;
  };
  const double budget = std::log(1.0 / spec.target_rel_tol) + kTailMargin;
  const double probe = tail_radius(t, 1.0, 6.0 * eta * eta, budget);
  double log_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 256; ++i) {
    log_max = std::max(log_max, exponent(-probe + 2.0 * probe * i / 256).real());
  }
  double r = spec.truncation_radius;
  if (r == 0.0) {
    r = tail_radius(t, 1.0, 6.0 * eta * eta, budget + log_max + x * eta);
  }
  const double width = kPi / (2.0 * (std::abs(x) + std::pow(4.0 * t, 0.25)));
  const bool adaptive = spec.panels_per_axis == 0;
  const int start = adaptive ? even_at_least(2.0 * r / width, 4)
                             : spec.panels_per_axis;
  const int nodes = spec.nodes_per_panel;
  QuadratureSpec spec1 = spec;
  spec1.max_nodes_per_axis = std::max(spec.max_nodes_per_axis, 1 << 16);

  KernelValue kv = refine(
      [&](int panels) {
        const AxisRule rule = panel_rule(r, panels, nodes);
        std::vector<Partial> terms(rule.x.size());
        for (size_t k = 0; k < rule.x.size(); ++k) {
          const Complex ex = exponent(rule.x[k]) - log_max;
          const double m = rule.w[k] * std::exp(ex.real());
          terms[k] = {m * Complex(std::cos(ex.imag()), std::sin(ex.imag())), m};
        }
        const Partial p = pairwise(terms, 0, terms.size());
        return RawIntegral{p.sum, p.mass};
      },
      start, adaptive, nodes, spec1, log_max);
  const double norm1 = 1.0 / (2.0 * kPi);
  kv.value *= norm1;
  kv.estimated_error *= norm1;
  kv.imag_residue *= norm1;
  kv.mass *= norm1;
  kv.truncation_radius = r;
  kv.shift = {eta, 0.0};
  kv.method = eta == 0.0 ? Method::kDirect : Method::kShifted;
  return kv;
}

}  // namespace qheat
