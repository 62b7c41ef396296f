// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "quartic_heat/finsler.hpp"
#include "quartic_heat/quadrature.hpp"
#include "quartic_heat/saddle.hpp"
#include "quartic_heat/symbol.hpp"

namespace qheat {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view s, size_t line_no) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  // from_chars rejects a leading '+'.
  const char* begin = (!s.empty() && s.front() == '+') ? s.data() + 1 : s.data();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw DomainError("line " + std::to_string(line_no) + ": bad number '" +
                      std::string(s) + "'");
  }
  return v;
}

}  // namespace

CoefficientField CoefficientField::from_samples(std::vector<FieldSample> samples) {
  if (samples.empty()) throw DomainError("coefficient field has no samples");
  return CoefficientField(std::move(samples));
}

CoefficientField CoefficientField::from_csv(std::istream& in) {
  static constexpr std::array<std::string_view, 5> kColumns = {
      "x1", "x2", "alpha", "beta", "gamma"};
  std::array<std::optional<size_t>, 5> index;
  bool have_header = false;
  size_t width = 0;
  std::vector<FieldSample> samples;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split(line);
    if (!have_header) {
      for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t k = 0; k < kColumns.size(); ++k) {
          if (cells[i] == kColumns[k]) {
            if (index[k]) throw DomainError("duplicate column " + std::string(kColumns[k]));
            index[k] = i;
          }
        }
      }
      for (size_t k = 0; k < kColumns.size(); ++k) {
        if (!index[k]) {
          throw DomainError("CSV header lacks column " + std::string(kColumns[k]));
        }
      }
      width = cells.size();
      have_header = true;
      continue;
    }
    if (cells.size() != width) {
      throw DomainError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(width) + " fields");
    }
    auto get = [&](size_t k) { return parse_number(cells[*index[k]], line_no); };
    samples.push_back({{get(0), get(1)}, get(2), get(3), get(4)});
  }
  if (!have_header) throw DomainError("CSV is empty (header row required)");
  if (samples.empty()) throw DomainError("CSV has a header but no samples");
  return CoefficientField(std::move(samples));
}

CoefficientField CoefficientField::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return from_csv(in);
}

CoefficientField CoefficientField::preset(std::string_view name,
                                          std::span<const double> params,
                                          int n) {
  if (n < 1) throw DomainError("preset grid needs n >= 1");
  auto need = [&](size_t k) {
    if (params.size() != k) {
      throw DomainError("preset " + std::string(name) + " takes " +
                        std::to_string(k) + " parameters");
    }
  };
  std::vector<FieldSample> s;
  s.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x1 = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      const double x2 = n == 1 ? 0.0 : static_cast<double>(j) / (n - 1);
      if (name == "constant") {
        need(3);
        s.push_back({{x1, x2}, params[0], params[1], params[2]});
      } else if (name == "q_ramp") {
        need(2);
        s.push_back({{x1, x2}, 1.0, params[0] + (params[1] - params[0]) * x1, 1.0});
      } else if (name == "anisotropic") {
        need(1);
        const double a = 1.0 + x1, g = 2.0 - x2;
        s.push_back({{x1, x2}, a, params[0] * std::sqrt(a * g), g});
      } else {
        throw DomainError("unknown preset " + std::string(name));
      }
    }
  }
  return CoefficientField(std::move(s));
}

FieldReport analyze_field(const CoefficientField& f) {
  FieldReport r{};
  r.k_star = -std::numeric_limits<double>::infinity();
  r.q_min = std::numeric_limits<double>::infinity();
  r.q_max = -std::numeric_limits<double>::infinity();
  const auto& samples = f.samples();
  for (size_t i = 0; i < samples.size(); ++i) {
    const FieldSample& s = samples[i];
    std::optional<Coefficients> c;
    try {
      c = Coefficients::make(s.alpha, s.beta, s.gamma);
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "sample " << i << " at (" << s.location[0] << ", " << s.location[1]
          << "): " << e.what();
      throw NonEllipticSample(msg.str(), i, s.location);
    }
    const ConvexityData d = convexity_data(*c);
    if (d.k > r.k_star) {
      r.k_star = d.k;
      r.k_star_location = s.location;
    }
    r.q_min = std::min(r.q_min, d.q);
    r.q_max = std::max(r.q_max, d.q);
    ++r.regime_histogram[static_cast<size_t>(d.regime.branch)];
    if (d.regime.on_boundary) ++r.boundary_samples;
  }
  r.sample_count = samples.size();
  r.sigma_star = sigma_from_k(r.k_star);
  return r;
}

namespace {

double peak_factor(OscillationForm form) {
  return form == OscillationForm::kOnePlusCos ? 2.0 : 1.0;
}

}  // namespace

std::vector<double> peak_times(const Coefficients& c, const RealVec2& x,
                               double lambda_min, double lambda_max,
                               int uniform_points) {
  if (!(lambda_min > 0.0 && lambda_max > lambda_min)) {
    throw DomainError("peak_times needs 0 < lambda_min < lambda_max");
  }
  const AsymptoticEstimate e = asymptotic_estimate(c, x);
  auto t_of = [](double lambda) { return 1.0 / (4.0 * lambda * lambda * lambda); };
  std::vector<double> out;
  if (e.oscillation_form == OscillationForm::kNone) {
    if (uniform_points < 2) throw DomainError("peak_times needs uniform_points >= 2");
    for (int i = 0; i < uniform_points; ++i) {
      out.push_back(t_of(lambda_min + (lambda_max - lambda_min) * i / (uniform_points - 1)));
    }
  } else {
    // one_plus_cos peaks at B lambda + C = 2 pi k; |cos| also at odd pi k.
    const double period = e.oscillation_form == OscillationForm::kCos ? kPi : 2.0 * kPi;
    const double k0 = std::ceil((e.oscillation_freq * lambda_min + e.oscillation_phase) / period);
    for (double k = k0;; k += 1.0) {
      const double lambda = (period * k - e.oscillation_phase) / e.oscillation_freq;
      if (lambda > lambda_max) break;
      out.push_back(t_of(lambda));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GaussianFit gaussian_bound_check(const Coefficients& c, const RealVec2& x,
                                 std::span<const double> t_sweep) {
  const AsymptoticEstimate e = asymptotic_estimate(c, x);
  const double top = peak_factor(e.oscillation_form);
  std::vector<double> eligible;
  for (double t : t_sweep) {
    if (!(t > 0.0)) throw DomainError("t sweep must be positive");
    const double lambda = std::cbrt(1.0 / (4.0 * t));
    if (std::abs(e.oscillation(lambda)) >= 0.9 * top) eligible.push_back(t);
  }
  std::sort(eligible.begin(), eligible.end());
  if (eligible.size() < 2) {
    throw DomainError("gaussian_bound_check needs two t near oscillation peaks");
  }
  const double d43 = std::pow(distance_d0(c, x), 4.0 / 3.0);
  const size_t n = eligible.size();
  double su = 0.0, sy = 0.0, suu = 0.0, suy = 0.0;
  for (double t : eligible) {
    const KernelValue g = green_function(c, x, t);
    if (!g.ok()) {
      throw ToleranceError("oracle failed at t = " + std::to_string(t), g.value,
                           g.estimated_error);
    }
    const double y = std::log(std::abs(g.value)) + std::log(t) / 3.0;
    const double u = d43 * std::cbrt(1.0 / t);
    su += u;
    sy += y;
    suu += u * u;
    suy += u * y;
  }
  GaussianFit fit;
  const double m = static_cast<double>(n);
  fit.rate = -(m * suy - su * sy) / (m * suu - su * su);
  fit.expected = convexity_data(c).sigma;
  fit.relative_error = std::abs(fit.rate - fit.expected) / fit.expected;
  fit.t_range = {eligible.front(), eligible.back()};
  fit.points = n;
  return fit;
}

}  // namespace qheat
