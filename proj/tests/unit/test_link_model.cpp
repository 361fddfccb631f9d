#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "antsel/link_model.hpp"
#include "antsel/params.hpp"

namespace antsel {
namespace {

SystemParams toy_params(double rho = 10.0, double b = 0.4) {
  SystemParams p;
  p.n_bs = p.n_ue1 = p.n_ue2 = 1;
  p.a = 1.0 - b;
  p.b = b;
  p.rho = rho;
  p.omega_h = p.omega_g = 1.0;
  return p;
}

TEST(DeriveParams, ReferenceScenario) {
  const SystemParams p = derive_params(ScenarioConfig{});
  EXPECT_DOUBLE_EQ(p.omega_h, 27000.0);
  EXPECT_DOUBLE_EQ(p.omega_g, 1e6);
  EXPECT_NEAR(p.rho, 1e9, 1e-3);
  EXPECT_DOUBLE_EQ(p.a, 0.6);
  EXPECT_DOUBLE_EQ(p.b, 0.4);
}

TEST(DeriveParams, UnitDistanceGivesUnitOmega) {
  ScenarioConfig c;
  c.d1 = c.d2 = 1.0;
  const SystemParams p = derive_params(c);
  EXPECT_DOUBLE_EQ(p.omega_h, 1.0);
  EXPECT_DOUBLE_EQ(p.omega_g, 1.0);
}

TEST(DeriveParams, RejectsInvalidPowerSplit) {
  for (double b : {0.0, 0.5, 0.6, -0.1}) {
    ScenarioConfig c;
    c.b = b;
    try {
      derive_params(c);
      FAIL() << "b = " << b << " accepted";
    } catch (const ParamError& e) {
      EXPECT_NE(std::string(e.what()).find("a > b"), std::string::npos);
    }
  }
}

TEST(DeriveParams, RejectsBadGeometryAndCounts) {
  ScenarioConfig c;
  c.d1 = 0.0;
  EXPECT_THROW(derive_params(c), ParamError);
  c = {};
  c.alpha = -1.0;
  EXPECT_THROW(derive_params(c), ParamError);
  c = {};
  c.n_ue2 = 0;
  EXPECT_THROW(derive_params(c), ParamError);
}

TEST(DbmToLinear, Ratio) {
  EXPECT_NEAR(dbm_to_linear_ratio(20.0, -70.0), 1e9, 1e-3);
  EXPECT_DOUBLE_EQ(dbm_to_linear_ratio(0.0, 0.0), 1.0);
}

TEST(NomaRates, ZeroChannel) {
  const RateReport r = noma_rates(0.0, 0.0, toy_params());
  EXPECT_EQ(r.r1, 0.0);
  EXPECT_EQ(r.r2, 0.0);
  EXPECT_EQ(r.r_sum, 0.0);
  EXPECT_TRUE(r.delta);
  EXPECT_EQ(r.eta, 1.0);
}

TEST(NomaRates, HandEvaluatedExample) {
  const RateReport r = noma_rates(2.0, 1.0, toy_params());
  EXPECT_TRUE(r.delta);
  EXPECT_NEAR(r.r1, std::log2(9.0), 1e-12);
  EXPECT_NEAR(r.r2, std::log2(2.2), 1e-12);
  EXPECT_NEAR(r.r_sum, 4.307429, 1e-6);
}

TEST(NomaRates, MirroredExample) {
  const RateReport r = noma_rates(1.0, 2.0, toy_params());
  EXPECT_FALSE(r.delta);
  EXPECT_NEAR(r.r1, 1.137504, 1e-6);
  EXPECT_NEAR(r.r2, 3.169925, 1e-6);
}

TEST(NomaRates, UserSwapSymmetry) {
  std::mt19937_64 gen(11);
  std::lognormal_distribution<double> gain(0.0, 2.0);
  for (int n = 0; n < 1000; ++n) {
    const SystemParams p = toy_params(std::pow(10.0, n % 12), 0.05 + 0.4 * (n % 9) / 9.0);
    const double h = gain(gen);
    const double g = gain(gen);
    const RateReport x = noma_rates(h, g, p);
    const RateReport y = noma_rates(g, h, p);
    EXPECT_DOUBLE_EQ(x.r_sum, y.r_sum);
    EXPECT_DOUBLE_EQ(x.r1, y.r2);
    EXPECT_DOUBLE_EQ(x.r2, y.r1);
  }
}

TEST(NomaRates, MonotoneInEachGain) {
  std::mt19937_64 gen(12);
  std::lognormal_distribution<double> gain(0.0, 1.5);
  const SystemParams p = toy_params(1e3);
  for (int n = 0; n < 2000; ++n) {
    const double h = gain(gen);
    const double g = gain(gen);
    const double base = noma_rates(h, g, p).r_sum;
    for (double eps : {1e-9, 1e-3, 0.5}) {
      EXPECT_GE(noma_rates(h * (1 + eps), g, p).r_sum, base);
      EXPECT_GE(noma_rates(h, g * (1 + eps), p).r_sum, base);
    }
  }
}

TEST(NomaRates, WeakRateSaturatesAtHighSnr) {
  for (double b : {0.1, 0.25, 0.4, 0.49}) {
    const SystemParams p = toy_params(1e12, b);
    for (double gw : {1e-4, 1e-2, 1.0, 1e3}) {
      EXPECT_LE(std::fabs(noma_weak_rate(gw, p) - std::log2(1.0 / b)), 0.01);
    }
  }
}

TEST(NomaRates, TieMakesUe1Strong) {
  const SystemParams p = toy_params();
  for (double x : {0.0, 1e-300, 0.3, 1.0, 7.5, 1e200}) {
    EXPECT_TRUE(noma_rates(x, x, p).delta);
  }
}

TEST(JainIndex, Examples) {
  EXPECT_DOUBLE_EQ(jain_index(1.7, 1.7), 1.0);
  EXPECT_DOUBLE_EQ(jain_index(1.0, 0.0), 0.5);
  EXPECT_NEAR(jain_index(3.169925, 1.137504), 0.817906, 1e-6);
  EXPECT_DOUBLE_EQ(jain_index(0.0, 0.0), 1.0);
}

TEST(JainIndex, Bounds) {
  std::mt19937_64 gen(13);
  std::exponential_distribution<double> e(1.0);
  for (int n = 0; n < 10000; ++n) {
    const double r1 = n % 7 == 0 ? 0.0 : e(gen);
    const double r2 = e(gen);
    const double eta = jain_index(r1, r2);
    EXPECT_GE(eta, 0.5);
    EXPECT_LE(eta, 1.0);
  }
}

TEST(OmaRates, ZeroChannel) { EXPECT_EQ(oma_rates(0.0, 0.0, toy_params()).r_sum, 0.0); }

TEST(OmaRates, TimeShareExample) {
  const RateReport r = oma_rates(2.0, 1.0, toy_params());
  EXPECT_NEAR(r.r1, 0.6 * std::log2(21.0), 1e-12);
  EXPECT_NEAR(r.r2, 0.4 * std::log2(11.0), 1e-12);
  EXPECT_NEAR(r.r_sum, 4.0191631, 1e-6);
  const RateReport m = oma_rates(1.0, 2.0, toy_params());
  EXPECT_NEAR(m.r1, r.r2, 1e-12);
  EXPECT_NEAR(m.r2, r.r1, 1e-12);
}

TEST(OmaRates, StrictlyDecreasingInB) {
  std::mt19937_64 gen(14);
  std::lognormal_distribution<double> gain(0.0, 1.5);
  for (int n = 0; n < 500; ++n) {
    double hs = gain(gen);
    double hw = gain(gen);
    if (hs < hw) std::swap(hs, hw);
    if (hs == hw) continue;
    const double rho = std::pow(10.0, n % 10);
    double prev = INFINITY;
    for (double b = 0.05; b < 0.5; b += 0.05) {
      const double r = oma_rates(hs, hw, toy_params(rho, b)).r_sum;
      EXPECT_LT(r, prev);
      prev = r;
    }
  }
}

}  // namespace
}  // namespace antsel
