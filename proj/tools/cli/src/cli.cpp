// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "quartic_heat_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

#include "quartic_heat/errors.hpp"
#include "quartic_heat/field.hpp"
#include "quartic_heat/finsler.hpp"
#include "quartic_heat/quadrature.hpp"
#include "quartic_heat/saddle.hpp"
#include "quartic_heat/symbol.hpp"
#include "quartic_heat_cli/sweep.hpp"
#include "quartic_heat_cli/verify.hpp"

namespace qheat::cli {

namespace {

using nlohmann::ordered_json;

// Parses "a,b" into a vector.
RealVec2 parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("expected x1,x2 but got '" + s + "'");
  RealVec2 v{};
  const std::string parts[2] = {s.substr(0, comma), s.substr(comma + 1)};
  for (int i = 0; i < 2; ++i) {
    const std::string& p = parts[i];
    const char* b = p.data();
    if (!p.empty() && p.front() == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, p.data() + p.size(), v[i]);
    if (p.empty() || ec != std::errc() || ptr != p.data() + p.size() ||
        !std::isfinite(v[i])) {
      throw DomainError("bad coordinate '" + p + "'");
    }
  }
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string p = s.substr(start, comma - start);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (p.empty() || ec != std::errc() || ptr != p.data() + p.size()) {
      throw DomainError("bad number '" + p + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

MethodPolicy parse_method(const std::string& m) {
  if (m == "auto") return MethodPolicy::kAuto;
  if (m == "direct") return MethodPolicy::kDirect;
  if (m == "shifted") return MethodPolicy::kShifted;
  throw DomainError("unknown method " + m);
}

// Default evaluation point of a regime: the supported special direction.
RealVec2 default_point(const Coefficients& c) {
  return c.q() <= 0.0 ? RealVec2{1.0, 1.0} : RealVec2{1.0, 0.0};
}

ordered_json estimate_json(const AsymptoticEstimate& e) {
  return {{"exp_rate_lambda", e.exp_rate_lambda},
          {"power", e.power},
          {"amplitude", e.amplitude},
          {"oscillation_freq", e.oscillation_freq},
          {"oscillation_phase", e.oscillation_phase},
          {"oscillation_form", std::string(to_string(e.oscillation_form))},
          {"g_prefactor", e.g_prefactor},
          {"g_rate", e.g_rate},
          {"g_freq", e.g_freq}};
}

// Writes to --out when given, else to out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write " + path);
      os_ = &file_;
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

struct Options {
  double alpha = 1.0, beta = 0.0, gamma = 1.0;
  std::string x;
  double t = 0.0;
  double lambda_min = 5.0, lambda_max = 25.0;
  int steps = 201;
  std::string method = "auto";
  double tol = 1e-8;
  std::uint64_t seed = 42;
  std::string out_path;
  std::string suite = "all";
  double samples = 1.0;
  std::string csv_path, preset, params;
  int grid = 11;
};

void add_coefficients(CLI::App* app, Options& o) {
  app->add_option("--alpha", o.alpha, "coefficient alpha > 0")->capture_default_str();
  app->add_option("--beta", o.beta, "coupling beta")->capture_default_str();
  app->add_option("--gamma", o.gamma, "coefficient gamma > 0")->capture_default_str();
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const Coefficients c = Coefficients::make(o.alpha, o.beta, o.gamma);
  if (!(o.t > 0.0)) throw DomainError("--t must be > 0");
  const RealVec2 x = o.x.empty() ? RealVec2{0.0, 0.0} : parse_point(o.x);
  QuadratureSpec spec;
  spec.target_rel_tol = o.tol;
  const KernelValue kv = green_function(c, x, o.t, spec, parse_method(o.method));
  Sink sink(o.out_path, out);
  auto& os = sink.get();
  os << "G(x,t)           " << format_number(kv.value) << "\n"
     << "estimated_error  " << format_number(kv.estimated_error) << "\n"
     << "method           " << to_string(kv.method) << "\n"
     << "status           " << to_string(kv.status) << "\n"
     << "shift            " << format_number(kv.shift[0]) << ","
     << format_number(kv.shift[1]) << "\n"
     << "panels_per_axis  " << kv.panels_per_axis << "\n"
     << "radius           " << format_number(kv.truncation_radius) << "\n";
  return kv.ok() ? kExitOk : kExitTolerance;
}

int cmd_asymptotic(const Options& o, std::ostream& out) {
  const Coefficients c = Coefficients::make(o.alpha, o.beta, o.gamma);
  const RealVec2 x = o.x.empty() ? default_point(c) : parse_point(o.x);
  const AsymptoticEstimate e = asymptotic_estimate(c, x);
  const ConvexityData cd = convexity_data(c);
  ordered_json j = {{"alpha", c.alpha()},
                    {"beta", c.beta()},
                    {"gamma", c.gamma()},
                    {"x", {x[0], x[1]}},
                    {"Q", cd.q},
                    {"branch", std::string(to_string(cd.regime.branch))},
                    {"k", cd.k},
                    {"sigma", cd.sigma},
                    {"d0", distance_d0(c, x)},
                    {"model", estimate_json(e)}};
  if (o.t > 0.0) j["g_model_at_t"] = e.g_model(o.t);
  if (!o.out_path.empty()) {
    if (o.steps < 2 || !(o.lambda_min > 0.0) || !(o.lambda_max >= o.lambda_min)) {
      throw DomainError("invalid lambda sweep");
    }
    Sink sink(o.out_path, out);
    auto& os = sink.get();
    os << "# quartic-heat v1, beta=" << format_number(c.beta())
       << ", direction=" << direction_label(x) << "\n"
       << "lambda,F_model,t,G_model\n";
    for (int i = 0; i < o.steps; ++i) {
      const double lambda =
          o.lambda_min + (o.lambda_max - o.lambda_min) * i / (o.steps - 1);
      const double t = 1.0 / (4.0 * lambda * lambda * lambda);
      os << format_number(lambda) << ',' << format_number(e.f_model(lambda)) << ','
         << format_number(t) << ',' << format_number(e.g_model(t)) << '\n';
    }
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  SweepConfig cfg;
  cfg.alpha = o.alpha;
  cfg.beta = o.beta;
  cfg.gamma = o.gamma;
  const Coefficients c = Coefficients::make(o.alpha, o.beta, o.gamma);
  cfg.x = o.x.empty() ? default_point(c) : parse_point(o.x);
  cfg.lambda_min = o.lambda_min;
  cfg.lambda_max = o.lambda_max;
  cfg.steps = o.steps;
  cfg.method = parse_method(o.method);
  cfg.tol = o.tol;
  const CompareResult r = compare_sweep(cfg);
  Sink sink(o.out_path, out);
  write_compare_csv(cfg, r, sink.get());
  return r.all_ok() ? kExitOk : kExitTolerance;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.sample_factor = o.samples;
  const auto results = run_suites(o.suite, vo);
  ordered_json j = {{"seed", o.seed}, {"suites", ordered_json::array()}};
  bool ok = true;
  for (const auto& r : results) {
    ordered_json s = {{"name", r.name},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"passed", r.passed()}};
    if (!r.passed()) s["first_counterexample"] = r.first_counterexample;
    j["suites"].push_back(s);
    ok = ok && r.passed();
  }
  j["passed"] = ok;
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << "\n";
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_field(const Options& o, std::ostream& out) {
  std::optional<CoefficientField> f;
  if (!o.csv_path.empty() && !o.preset.empty()) {
    throw DomainError("give either a CSV path or --preset");
  }
  if (!o.csv_path.empty()) {
    f = CoefficientField::from_csv_file(o.csv_path);
  } else if (!o.preset.empty()) {
    const std::vector<double> p = o.params.empty() ? std::vector<double>{} : parse_list(o.params);
    f = CoefficientField::preset(o.preset, p, o.grid);
  } else {
    throw DomainError("field needs a CSV path or --preset");
  }
  const FieldReport r = analyze_field(*f);
  ordered_json j = {
      {"k_star", r.k_star},
      {"sigma_star", r.sigma_star},
      {"q_range", {r.q_min, r.q_max}},
      {"regime_histogram",
       {{"subconvex", r.regime_histogram[0]},
        {"strongly_convex", r.regime_histogram[1]},
        {"superconvex", r.regime_histogram[2]}}},
      {"boundary_samples", r.boundary_samples},
      {"sample_count", r.sample_count},
      {"k_star_location", {r.k_star_location[0], r.k_star_location[1]}}};
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quartic-heat: heat kernels of fourth-order elliptic operators on R^2",
               "quartic-heat"};
  app.require_subcommand(1);
  Options o;

  auto* kernel = app.add_subcommand("kernel", "evaluate G(x,t) by quadrature");
  add_coefficients(kernel, o);
  kernel->add_option("--x", o.x, "point x1,x2 (default 0,0)");
  kernel->add_option("--t", o.t, "time t > 0")->required();
  kernel->add_option("--method", o.method, "auto, direct or shifted");
  kernel->add_option("--tol", o.tol, "relative tolerance");
  kernel->add_option("--out", o.out_path, "output file");

  auto* asym = app.add_subcommand("asymptotic", "closed-form short-time model");
  add_coefficients(asym, o);
  asym->add_option("--x", o.x, "point x1,x2");
  asym->add_option("--t", o.t, "also evaluate the G model at t");
  asym->add_option("--lambda-min", o.lambda_min);
  asym->add_option("--lambda-max", o.lambda_max);
  asym->add_option("--steps", o.steps);
  asym->add_option("--out", o.out_path, "write the model sweep as CSV");

  auto* cmp = app.add_subcommand("compare", "oracle F(lambda) against the model");
  add_coefficients(cmp, o);
  cmp->add_option("--x", o.x, "point x1,x2 (default: the regime's direction)");
  cmp->add_option("--lambda-min", o.lambda_min)->capture_default_str();
  cmp->add_option("--lambda-max", o.lambda_max)->capture_default_str();
  cmp->add_option("--steps", o.steps)->capture_default_str();
  cmp->add_option("--method", o.method, "auto, direct or shifted");
  cmp->add_option("--tol", o.tol, "relative tolerance");
  cmp->add_option("--out", o.out_path, "output CSV (default stdout)");

  auto* ver = app.add_subcommand("verify", "property suites");
  ver->add_option("suite", o.suite, "identities, finsler, quadrature, saddles or all");
  ver->add_option("--seed", o.seed)->capture_default_str();
  ver->add_option("--samples", o.samples, "sample count multiplier");
  ver->add_option("--out", o.out_path, "JSON report file");

  auto* fld = app.add_subcommand("field", "k* and sigma* of a coefficient field");
  fld->add_option("csv", o.csv_path, "CSV with columns x1,x2,alpha,beta,gamma");
  fld->add_option("--preset", o.preset, "constant, q_ramp or anisotropic");
  fld->add_option("--params", o.params, "comma-separated preset parameters");
  fld->add_option("--grid", o.grid, "preset grid size");
  fld->add_option("--out", o.out_path, "JSON report file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (asym->parsed()) return cmd_asymptotic(o, out);
    if (cmp->parsed()) return cmd_compare(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (fld->parsed()) return cmd_field(o, out);
  } catch (const ToleranceError& e) {
    err << "tolerance failure: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitTolerance;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qheat::cli
