#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "antsel/analysis.hpp"
#include "antsel/quadrature.hpp"
#include "antsel/selection.hpp"
#include "antsel/specfun.hpp"

namespace antsel {
namespace {

SystemParams make_params(int n, int m, int k, double omega_h, double omega_g, double rho,
                         double b = 0.4) {
  SystemParams p;
  p.n_bs = n;
  p.n_ue1 = m;
  p.n_ue2 = k;
  p.a = 1.0 - b;
  p.b = b;
  p.rho = rho;
  p.omega_h = omega_h;
  p.omega_g = omega_g;
  return p;
}

SystemParams reference(double ps_dbm = 30.0, int n = 2) {
  ScenarioConfig c;
  c.ps_dbm = ps_dbm;
  c.n_bs = n;
  return derive_params(c);
}

TEST(RowMax, Limits) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(cdf_row_max(0.0, 2.0, m), 0.0);
    EXPECT_NEAR(cdf_row_max(50.0, 2.0, m), 1.0, 1e-15);
    EXPECT_NEAR(cdf_row_max_expanded(50.0, 2.0, m), 1.0, 1e-13);
  }
}

TEST(RowMax, SingleAntennaIsExponential) {
  for (double x : {0.1, 1.0, 3.0}) {
    EXPECT_NEAR(cdf_row_max(x, 1.7, 1), 1.0 - std::exp(-1.7 * x), 1e-15);
    EXPECT_NEAR(pdf_row_max(x, 1.7, 1), 1.7 * std::exp(-1.7 * x), 1e-15);
  }
}

TEST(RowMax, TwoAntennaExample) { EXPECT_NEAR(cdf_row_max(1.0, 1.0, 2), 0.399576, 1e-6); }

TEST(RowMax, ExpandedFormsAgree) {
  for (int m = 1; m <= 6; ++m) {
    for (double x = 0.05; x < 8.0; x *= 1.6) {
      EXPECT_NEAR(cdf_row_max_expanded(x, 0.8, m), cdf_row_max(x, 0.8, m), 1e-12);
      EXPECT_NEAR(pdf_row_max_expanded(x, 0.8, m), pdf_row_max(x, 0.8, m), 1e-12);
    }
  }
}

TEST(GammaIW, Examples) {
  const SystemParams unit = make_params(1, 1, 1, 1.0, 1.0, 1e9);
  EXPECT_EQ(cdf_gamma_i_w(0.0, unit), 0.0);
  EXPECT_NEAR(cdf_gamma_i_w(1.0, unit), 1.0 - std::exp(-2.0), 1e-12);
}

TEST(GammaIW, IndependenceIdentity) {
  const SystemParams p = make_params(3, 2, 3, 1.3, 0.6, 1e9);
  std::mt19937_64 gen(31);
  std::exponential_distribution<double> e(0.7);
  for (int n = 0; n < 100; ++n) {
    const double x = e(gen);
    const double ref = 1.0 - (1.0 - cdf_row_max_h(x, p)) * (1.0 - cdf_row_max_g(x, p));
    EXPECT_NEAR(cdf_gamma_i_w(x, p), ref, 1e-13);
  }
}

TEST(AiaDistribution, SingleAntennaReducesToMaxOfTwoExponentials) {
  const double oh = 1.3, og = 0.7;
  const SystemParams p = make_params(1, 1, 1, oh, og, 1e9);
  const AiaDistribution d(p);
  EXPECT_EQ(d.empty_competitor_weight(), 1.0);
  for (double x = 0.01; x < 12.0; x *= 1.5) {
    const double ref =
        oh * std::exp(-oh * x) + og * std::exp(-og * x) - (oh + og) * std::exp(-(oh + og) * x);
    EXPECT_NEAR(d.pdf(x), ref, 1e-13);
    EXPECT_NEAR(pdf_gamma_s_a3(x, p), ref, 1e-13);
  }
}

TEST(AiaDistribution, SingleAntennaClosedFormsCoincide) {
  for (double rho : {1e6, 1e9, 1e12}) {
    const SystemParams p = make_params(1, 1, 1, 27000.0, 1e6, rho);
    EXPECT_NEAR(avg_sum_rate_aia(p), avg_sum_rate_a3(p), 1e-11 * avg_sum_rate_a3(p));
  }
}

TEST(Distributions, CdfShapeAndPdfNonnegative) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 3; ++k) {
        const SystemParams p = make_params(n, m, k, 1.2, 0.5, 1e9);
        const AiaDistribution aia(p);
        EXPECT_NEAR(aia.cdf(0.0), 0.0, 1e-14);
        EXPECT_EQ(cdf_gamma_s_a3(0.0, p), 0.0);
        double prev_aia = 0.0, prev_a3 = 0.0;
        for (double x = 1e-4; x < 60.0; x *= 1.05) {
          const double ca = aia.cdf(x);
          const double c3 = cdf_gamma_s_a3(x, p);
          EXPECT_GE(ca, prev_aia - 1e-12);  // cancellation floor of the expansion near 0
          EXPECT_GE(c3, prev_a3);
          EXPECT_GE(aia.pdf(x), -1e-12);
          EXPECT_GE(pdf_gamma_s_a3(x, p), 0.0);
          prev_aia = ca;
          prev_a3 = c3;
        }
        EXPECT_NEAR(prev_aia, 1.0, 1e-10);
        EXPECT_NEAR(prev_a3, 1.0, 1e-10);
      }
    }
  }
}

TEST(Distributions, AiaCdfIntegratesPdf) {
  const SystemParams p = make_params(3, 2, 2, 1.0, 0.4, 1e9);
  const AiaDistribution d(p);
  for (double x : {0.3, 1.0, 2.5, 6.0}) {
    const auto q = integrate_interval([&](double t) { return d.pdf(t); }, 0.0, x, 1e-13, 1e-13);
    EXPECT_NEAR(q.value, d.cdf(x), 1e-11);
  }
}

TEST(Distributions, A3ExpandedPdfMatchesProductForm) {
  for (int n = 1; n <= 3; ++n) {
    const SystemParams p = make_params(n, 2, 2, 1.3, 0.7, 1e9);
    for (double x = 0.05; x < 10.0; x *= 1.4) {
      EXPECT_NEAR(pdf_gamma_s_a3_expanded(x, p), pdf_gamma_s_a3(x, p), 1e-9);
    }
  }
}

TEST(Distributions, NormalizeOnReferenceGains) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 3; ++k) {
        const SystemParams p = make_params(n, m, k, 27000.0, 1e6, 1e9);
        const AiaDistribution aia(p);
        const double s = gain_scale(p);
        const double ia = integrate_half_line([&](double x) { return aia.pdf(x); }, s, 1e-12).value;
        const double i3 = integrate_half_line([&](double x) { return pdf_gamma_s_a3(x, p); }, s, 1e-12).value;
        EXPECT_NEAR(ia, 1.0, 1e-8);
        EXPECT_NEAR(i3, 1.0, 1e-8);
      }
    }
  }
}

TEST(Distributions, A3CdfAtSampleMedian) {
  const SystemParams p = reference(20.0);
  std::mt19937_64 gen(41);
  std::exponential_distribution<double> h(p.omega_h), g(p.omega_g);
  std::vector<double> s(100'000);
  for (auto& v : s) {
    double best = 0.0;
    for (int j = 0; j < p.n_bs * p.n_ue1; ++j) best = std::max(best, h(gen));
    for (int j = 0; j < p.n_bs * p.n_ue2; ++j) best = std::max(best, g(gen));
    v = best;
  }
  std::nth_element(s.begin(), s.begin() + 50'000, s.end());
  EXPECT_NEAR(cdf_gamma_s_a3(s[50'000], p), 0.5, 0.01);
}

TEST(ClosedForms, MatchQuadratureAtReferenceScenario) {
  for (double ps : {20.0, 30.0, 40.0}) {
    const SystemParams p = reference(ps);
    const AiaDistribution aia(p);
    const double qa = quadrature_avg_rate([&](double x) { return aia.pdf(x); }, p);
    const double q3 = quadrature_avg_rate([&](double x) { return pdf_gamma_s_a3(x, p); }, p);
    EXPECT_LE(std::fabs(aia.avg_sum_rate() / qa - 1.0), 1e-6);
    EXPECT_LE(std::fabs(avg_sum_rate_a3(p) / q3 - 1.0), 1e-6);
  }
  SystemParams p = reference();
  p.rho = 1e10;
  const AiaDistribution aia(p);
  EXPECT_LE(std::fabs(aia.avg_sum_rate() /
                          quadrature_avg_rate([&](double x) { return aia.pdf(x); }, p) -
                      1.0),
            1e-6);
}

TEST(ClosedForms, TermsAreIndividuallyFinite) {
  const SystemParams p = reference(30.0, 3);
  const AiaDistribution d(p);
  for (int i = 1; i <= p.n_ue1; ++i) {
    for (int j = 1; j <= p.n_ue2; ++j) {
      for (const auto& term : d.terms()) {
        const AiaRateTerms t = aia_rate_terms(term, i, j, p);
        EXPECT_TRUE(std::isfinite(t.t1) && std::isfinite(t.t2) && std::isfinite(t.t3) &&
                    std::isfinite(t.t4));
      }
    }
  }
}

TEST(ClosedForms, LogSlopeInSnr) {
  for (int n : {1, 2, 4}) {
    SystemParams p = reference(30.0, n);
    p.rho = 1e8;
    const double lo_aia = avg_sum_rate_aia(p), lo_a3 = avg_sum_rate_a3(p);
    p.rho = 1e9;
    const double hi_aia = avg_sum_rate_aia(p), hi_a3 = avg_sum_rate_a3(p);
    const double decade = std::log2(10.0);
    EXPECT_NEAR((hi_aia - lo_aia) / decade, 1.0, 0.05);
    EXPECT_NEAR((hi_a3 - lo_a3) / decade, 1.0, 0.05);
  }
}

TEST(ClosedForms, A3DominatesAia) {
  for (int n = 1; n <= 8; ++n) {
    for (double ps : {20.0, 30.0, 40.0}) {
      const SystemParams p = reference(ps, n);
      EXPECT_GE(avg_sum_rate_a3(p), avg_sum_rate_aia(p) - 1e-12);
    }
  }
}

TEST(ClosedForms, ExpansionTooLargeSurfaces) {
  SystemParams p = make_params(16, 4, 4, 1.0, 1.0, 1e9);
  EXPECT_THROW(AiaDistribution{p}, ExpansionTooLarge);
}

TEST(LowSnrGuard, TripsAtZeroDbm) {
  EXPECT_TRUE(low_snr_warning(reference(0.0)));
  EXPECT_FALSE(low_snr_warning(reference(30.0)));
}

TEST(Quadrature, ExponentialDensityEqualsChiIdentity) {
  SystemParams p = make_params(1, 1, 1, 1.0, 1.0, 2.5, 0.4);  // b rho = 1
  const double v = quadrature_avg_rate([](double x) { return std::exp(-x); }, p, 1.0) -
                   std::log2(1.0 / p.b);
  const double expected = -chi(1.0, p.b, p.rho) / std::numbers::ln2;
  EXPECT_NEAR(v, expected, 1e-10);
  EXPECT_NEAR(v, 0.86034, 1e-5);
}

TEST(Quadrature, NarrowDensityActsLikePointMass) {
  // Gaussian bump of width w at x0: the mean of log2(1 + b rho x) sits below the
  // point-mass value by about w^2 / (2 x0^2 ln 2).
  SystemParams p = make_params(1, 1, 1, 1.0, 1.0, 1e6, 0.25);
  const double x0 = 2.0;
  for (double w : {0.2, 0.05}) {
    const double norm = 1.0 / (w * std::sqrt(2.0 * std::numbers::pi));
    auto pdf = [&](double x) { return norm * std::exp(-0.5 * std::pow((x - x0) / w, 2)); };
    const double v = quadrature_avg_rate(pdf, p, x0);
    const double expected = std::log2(1.0 + p.b * p.rho * x0) + std::log2(1.0 / p.b);
    EXPECT_NEAR(v, expected, w * w / (x0 * x0 * std::numbers::ln2)) << "w = " << w;
  }
}

TEST(Quadrature, NormalizationIntegrand) {
  for (double s : {1e-6, 1.0, 1e5}) {
    const auto r = integrate_half_line([&](double x) { return std::exp(-x / s) / s; }, s);
    EXPECT_NEAR(r.value, 1.0, 1e-9);
    EXPECT_GE(r.error, 0.0);
  }
}

TEST(Quadrature, FiniteInterval) {
  const auto r = integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
}

TEST(Quadrature, ReportsNonConvergence) {
  auto wild = [](double x) { return std::sin(1.0 / (x + 1e-12)) / (x + 1e-12); };
  EXPECT_THROW(integrate_interval(wild, 0.0, 1.0, 1e-15, 1e-15), QuadratureError);
}

}  // namespace
}  // namespace antsel
