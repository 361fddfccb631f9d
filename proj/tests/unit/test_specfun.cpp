#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <map>
#include <random>

#include "antsel/specfun.hpp"

namespace antsel {
namespace {

// Ei(x) = gamma + ln|x| + sum x^n/(n n!), in extended precision until the terms vanish.
long double ei_series_oracle(long double x) {
  long double term = 1.0L;
  long double sum = 0.0L;
  for (int n = 1; n < 1000; ++n) {
    term *= x / n;
    const long double add = term / n;
    sum += add;
    if (std::fabs(add) < 1e-30L * std::fabs(sum)) break;
  }
  return 0.57721566490153286060651209008240243L + std::log(std::fabs(x)) + sum;
}

TEST(LambdaCoeff, Examples) {
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(lambda_coeff(0, m), 1.0);
  EXPECT_EQ(lambda_coeff(1, 2), -2.0);
  EXPECT_EQ(lambda_coeff(2, 2), 1.0);
  EXPECT_EQ(lambda_coeff(3, 7), -35.0);
}

TEST(LambdaCoeff, AlternatingSumVanishes) {
  for (int m = 1; m <= 30; ++m) {
    double s = 0.0;
    for (int i = 0; i <= m; ++i) s += lambda_coeff(i, m);
    EXPECT_EQ(s, 0.0) << "M = " << m;
  }
}

TEST(LambdaCoeff, RejectsOutOfRange) {
  EXPECT_THROW(lambda_coeff(-1, 3), std::out_of_range);
  EXPECT_THROW(lambda_coeff(4, 3), std::out_of_range);
}

TEST(EnumerateTerms, SingleAntennaRowIsEmptyProduct) {
  const auto terms = enumerate_terms(0, 3, 2, 1.0, 2.0);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].c, 1u);
  EXPECT_EQ(terms[0].t, 1.0);
  EXPECT_EQ(terms[0].xi, 0.0);
}

TEST(EnumerateTerms, TwoByTwoHandExpansion) {
  const double oh = 1.5, og = 0.25;
  const auto terms = enumerate_terms(1, 2, 2, oh, og);
  ASSERT_EQ(terms.size(), 5u);
  double t0 = 0.0;
  int seen_l0 = 0;
  std::map<std::pair<double, double>, int> pair_terms;
  for (const auto& term : terms) {
    EXPECT_EQ(term.c, 1u);
    if (term.composition[0] == 1) {
      ++seen_l0;
      t0 = term.t;
      EXPECT_EQ(term.xi, 0.0);
    } else {
      pair_terms[{term.t, term.xi}]++;
    }
  }
  EXPECT_EQ(seen_l0, 1);
  EXPECT_EQ(t0, 1.0);
  EXPECT_EQ((pair_terms[{-4.0, oh + og}]), 1);
  EXPECT_EQ((pair_terms[{2.0, oh + 2 * og}]), 1);
  EXPECT_EQ((pair_terms[{2.0, 2 * oh + og}]), 1);
  EXPECT_EQ((pair_terms[{-1.0, 2 * oh + 2 * og}]), 1);
}

TEST(EnumerateTerms, CountMatchesBinomialAndWeightsSumToZero) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 3; ++k) {
        const auto terms = enumerate_terms(n - 1, m, k, 1.0, 3.0);
        const std::uint64_t expected = composition_count(n - 1, m * k + 1);
        EXPECT_EQ(terms.size(), expected);
        double c_fact = 1.0;
        for (int r = 1; r <= n - 1; ++r) c_fact *= r;
        std::uint64_t c_total = 0;
        CompensatedSum weight;
        for (const auto& t : terms) {
          c_total += t.c;
          weight += static_cast<double>(t.c) * t.t;
          EXPECT_EQ(std::accumulate(t.composition.begin(), t.composition.end(), 0), n - 1);
        }
        // sum of multinomial coefficients = (MK + 1)^(N - 1)
        EXPECT_EQ(static_cast<double>(c_total), std::pow(m * k + 1.0, n - 1));
        if (n >= 2) EXPECT_EQ(weight.value(), 0.0);
        else EXPECT_EQ(weight.value(), 1.0);
      }
    }
  }
}

TEST(EnumerateTerms, CompositionCount) {
  EXPECT_EQ(composition_count(0, 5), 1u);
  EXPECT_EQ(composition_count(1, 5), 5u);
  EXPECT_EQ(composition_count(3, 10), 220u);
  EXPECT_EQ(composition_count(200, 200), 0u);
}

TEST(EnumerateTerms, RejectsHugeExpansions) {
  EXPECT_THROW(enumerate_terms(15, 4, 4, 1.0, 1.0), ExpansionTooLarge);
}

TEST(ExpintEi, MinusOne) {
  EXPECT_NEAR(expint_ei(-1.0), -0.2193839343955203, 1e-15);
  EXPECT_NEAR(expint_ei(-1.0), static_cast<double>(ei_series_oracle(-1.0L)), 1e-15);
}

TEST(ExpintEi, AgreesWithExtendedPrecisionSeries) {
  // The long-double series stays accurate to about 1e-13 relative up to |x| = 8.
  for (double x = -0.001; x > -8.0; x *= 1.37) {
    const double ref = static_cast<double>(ei_series_oracle(x));
    EXPECT_NEAR(expint_ei(x), ref, 2e-13 * std::fabs(ref) + 1e-300) << "x = " << x;
  }
}

TEST(ExpintEi, AsymptoticBracket) {
  const double x = -40.0;
  const double lead = std::exp(x) / x;  // negative
  const double ei = expint_ei(x);
  EXPECT_LT(ei, lead * (1.0 - 1.0 / 40.0) * 0.999);
  EXPECT_GT(ei, lead);
}

TEST(ExpintEi, SmallArgumentLimit) {
  for (double x : {-1e-6, -1e-9, -1e-12}) {
    EXPECT_NEAR(expint_ei(x) - std::log(-x), kEulerGamma, 2e-6 * 1e6 * -x + 1e-15);
  }
}

TEST(ExpintEi, DerivativeIdentity) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-10.0, -0.1);
  for (int n = 0; n < 20; ++n) {
    const double x = u(gen);
    const double h = 1e-5 * std::fabs(x);
    const double fd = (expint_ei(x + h) - expint_ei(x - h)) / (2 * h);
    const double exact = std::exp(x) / x;
    EXPECT_LE(std::fabs(fd / exact - 1.0), 1e-6) << "x = " << x;
  }
}

TEST(ExpintEi, RegimesOverlap) {
  for (double ax = 1.0; ax <= 6.0; ax += 0.25) {
    const double s = expint_ei_series(-ax);
    const double cf = expint_ei_continued_fraction(-ax);
    EXPECT_LE(std::fabs(s / cf - 1.0), 1e-10) << "|x| = " << ax;
  }
}

TEST(ExpintEi, DomainError) {
  EXPECT_THROW(expint_ei(0.0), std::domain_error);
  EXPECT_THROW(expint_ei(1.0), std::domain_error);
}

TEST(ScaledE1, NoOverflowForHugeArguments) {
  for (double u : {10.0, 700.0, 1e4, 1e12}) {
    const double v = scaled_e1(u);
    EXPECT_TRUE(std::isfinite(v));
    // e^u E1(u) lies between 1/(u+1) and 1/u
    EXPECT_GE(v, 1.0 / (u + 1.0));
    EXPECT_LE(v, 1.0 / u);
  }
}

TEST(Chi, UnitArgument) {
  const double b = 0.4, rho = 25.0;
  EXPECT_NEAR(chi(b * rho, b, rho), std::exp(1.0) * expint_ei(-1.0), 1e-14);
  EXPECT_NEAR(chi(b * rho, b, rho), -0.59635, 1e-5);
}

TEST(Chi, GrowsLogarithmicallyWithSnr) {
  // u = x/(b rho) -> 0, so chi -> gamma_E + ln u: |chi| increases with rho.
  const double b = 0.4, x = 1e5;
  double prev = 0.0;
  for (double rho = 1.0; rho <= 1e12; rho *= 10.0) {
    const double c = chi(x, b, rho);
    EXPECT_LT(c, prev);
    prev = c;
  }
  const double u = x / (b * 1e12);
  EXPECT_NEAR(prev, kEulerGamma + std::log(u), 2.0 * u * std::fabs(std::log(u)));
}

TEST(Chi, IncreasingTowardZeroInX) {
  // chi = -e^u E1(u) with u = x/(b rho), and e^u E1(u) decreases in u.
  const double b = 0.3, rho = 1e3;
  double prev = -INFINITY;
  for (double x = 1e-3; x < 1e7; x *= 1.9) {
    const double c = chi(x, b, rho);
    EXPECT_GT(c, prev);
    EXPECT_LT(c, 0.0);
    prev = c;
  }
}

TEST(CompensatedSum, RecoversCancelledTerms) {
  CompensatedSum s;
  s += 1e16;
  s += 1.0;
  s += -1e16;
  EXPECT_EQ(s.value(), 1.0);
}

}  // namespace
}  // namespace antsel
