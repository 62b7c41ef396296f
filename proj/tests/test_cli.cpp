// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles.hpp"
#include "quartic_heat/quadrature.hpp"
#include "quartic_heat_cli/cli.hpp"

namespace qheat::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

double field_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string k;
  double v = 0.0;
  while (in >> k) {
    if (k == key) {
      in >> v;
      return v;
    }
    std::string rest;
    std::getline(in, rest);
  }
  return NAN;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("quartic_heat_test_" + name)).string();
}

TEST(Cli, KernelGammaAnchor) {
  const Result r = call({"kernel", "--alpha", "1", "--beta", "0", "--gamma", "1", "--x", "0,0",
                         "--t", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(field_value(r.out, "G(x,t)"), oracle::gamma_anchor(), 1e-8 * oracle::gamma_anchor());
  EXPECT_NE(r.out.find("method           direct"), std::string::npos);
}

TEST(Cli, KernelSeparable) {
  const Result r = call({"kernel", "--beta", "0", "--x", "1,1", "--t", "0.01"});
  EXPECT_EQ(r.code, kExitOk);
  const double k = kernel_1d(1.0, 0.01).value;
  EXPECT_NEAR(field_value(r.out, "G(x,t)"), k * k, 1e-8 * k * k);
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(call({"kernel", "--beta", "-2", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel", "--t", "-1"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel", "--t", "1", "--x", "1;2"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel", "--t", "1", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"bogus"}).code, kExitUsage);
  EXPECT_EQ(call({"compare", "--beta", "-0.5", "--x", "1,0"}).code, kExitUsage);
  EXPECT_EQ(call({"compare", "--beta", "4", "--lambda-min", "0.5"}).code, kExitUsage);
  EXPECT_EQ(call({"compare", "--beta", "4", "--steps", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "nothing"}).code, kExitUsage);
  EXPECT_EQ(call({"field"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const Result r = call({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("compare"), std::string::npos);
}

TEST(Cli, ToleranceFailureExitsThree) {
  // Direct quadrature far beyond its cancellation limit.
  const Result r = call({"kernel", "--beta", "0", "--x", "1,1", "--t", "1e-6", "--method",
                         "direct"});
  EXPECT_EQ(r.code, kExitTolerance);
  const Result c = call({"compare", "--beta", "0", "--lambda-min", "40", "--lambda-max", "45",
                         "--steps", "2", "--method", "direct"});
  EXPECT_EQ(c.code, kExitTolerance);
}

TEST(Cli, CompareCsv) {
  const std::vector<std::string> args = {"compare", "--beta", "4", "--lambda-min", "5",
                                         "--lambda-max", "25", "--steps", "5"};
  const Result a = call(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out.rfind("# quartic-heat v1, beta=4.000000000000e+00, direction=axis", 0), 0u);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("lambda,F_numeric_scaled,G_asymptotic_scaled,abs_diff", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
  // Byte-identical reruns.
  EXPECT_EQ(call(args).out, a.out);
}

TEST(Cli, CompareMethodIndependentAtSmallLambda) {
  auto column = [](const std::string& csv) {
    std::vector<double> v;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 'l') continue;
      const auto c1 = line.find(',');
      v.push_back(std::stod(line.substr(c1 + 1, line.find(',', c1 + 1) - c1 - 1)));
    }
    return v;
  };
  const std::vector<std::string> base = {"compare", "--beta", "-0.5", "--lambda-min", "2",
                                         "--lambda-max", "8", "--steps", "4", "--method"};
  auto with = [&](const std::string& m) {
    auto a = base;
    a.push_back(m);
    return call(a);
  };
  const auto d = column(with("direct").out), s = column(with("shifted").out);
  ASSERT_EQ(d.size(), 4u);
  ASSERT_EQ(s.size(), 4u);
  for (size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d[i], s[i], 1e-6 * std::abs(d[i]));
}

TEST(Cli, CompareToFileAndGenericPoint) {
  const std::string path = temp_path("compare.csv");
  const Result r = call({"compare", "--beta", "1.5", "--x", "0.7,0.3", "--lambda-min", "10",
                         "--lambda-max", "12", "--steps", "3", "--out", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_NE(header.find("direction=generic("), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, Asymptotic) {
  const Result r = call({"asymptotic", "--beta", "0", "--x", "1,1", "--t", "0.001"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["model"]["oscillation_form"], "one_plus_cos");
  EXPECT_DOUBLE_EQ(j["model"]["exp_rate_lambda"].get<double>(), 0.75);
  EXPECT_EQ(j["branch"], "strongly_convex");
  EXPECT_EQ(call({"asymptotic", "--beta", "-0.5", "--x", "1,0.5"}).code, kExitUsage);
}

TEST(Cli, VerifySuites) {
  const Result a = call({"verify", "saddles", "--seed", "42"});
  EXPECT_EQ(a.code, kExitOk) << a.out;
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["suites"].size(), 1u);
  EXPECT_EQ(call({"verify", "saddles", "--seed", "42"}).out, a.out);
  const Result i = call({"verify", "identities", "--seed", "7", "--samples", "0.05"});
  EXPECT_EQ(i.code, kExitOk) << i.out;
}

TEST(Cli, Field) {
  const std::string path = temp_path("field.csv");
  {
    std::ofstream f(path);
    f << "x1,x2,alpha,beta,gamma\n0,0,1,-0.5,1\n1,0,1,4,1\n";
  }
  const Result r = call({"field", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["k_star"].get<double>(), 48.0);
  {
    std::ofstream f(path);
    f << "x1,x2,alpha,beta,gamma\n0,0,1,3,1\n0,1,1,3,1\n";
  }
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(call({"field", path}).out)["k_star"].get<double>(), 8.0);
  {
    std::ofstream f(path);
  }
  EXPECT_EQ(call({"field", path}).code, kExitUsage);
  {
    std::ofstream f(path);
    f << "x1,x2,alpha,beta,gamma\n0.5,0.5,1,-1.2,1\n";
  }
  const Result bad = call({"field", path});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("(0.5, 0.5)"), std::string::npos);
  std::remove(path.c_str());
  const Result p = call({"field", "--preset", "q_ramp", "--params", "0,3", "--grid", "5"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(p.out)["k_star"].get<double>(), 8.0);
}

}  // namespace
}  // namespace qheat::cli
