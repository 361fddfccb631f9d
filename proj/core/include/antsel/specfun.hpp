#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace antsel {

/// Neumaier-compensated running sum for alternating-sign series.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Signed binomial coefficient (-1)^idx * C(order, idx). Throws
/// std::out_of_range unless 0 <= idx <= order.
double lambda_coeff(int idx, int order);

using LambdaFn = double (*)(int idx, int order);

/// One term C * t * exp(-xi x) of the multinomial expansion of
/// (1 - sum_{i,j} lambda_{i,M} lambda_{j,K} exp(-(i Omega_h + j Omega_g) x))^(N-1).
struct ExpansionTerm {
  std::uint64_t c = 1;           // multinomial coefficient (N-1)! / prod(l!)
  double t = 1.0;                // prod (-lambda_{i,M} lambda_{j,K})^{l_ij}
  double xi = 0.0;               // sum (i Omega_h + j Omega_g) l_ij
  std::vector<int> composition;  // (l_0, l_11, l_12, ..., l_MK), row-major in (i, j)
};

class ExpansionTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest number of terms enumerate_terms() will produce.
inline constexpr std::uint64_t kMaxExpansionTerms = 500'000;

/// Number of compositions of n into `slots` nonnegative parts,
/// C(n + slots - 1, slots - 1). Returns 0 on uint64 overflow.
std::uint64_t composition_count(int n, int slots);

/// All compositions of n_minus_1 into M*K + 1 nonnegative parts, in
/// lexicographic order. Throws ExpansionTooLarge when the term count exceeds
/// kMaxExpansionTerms or a coefficient leaves the exact double-integer range.
std::vector<ExpansionTerm> enumerate_terms(int n_minus_1, int m, int k, double omega_h,
                                           double omega_g, LambdaFn lambda = &lambda_coeff);

/// Exponential integral Ei(x) for x < 0. Throws std::domain_error otherwise.
double expint_ei(double x);

/// The two evaluation regimes behind expint_ei, exposed for cross-checks.
/// Power series: Ei(x) = gamma_E + ln|x| + sum x^n / (n n!).
double expint_ei_series(double x);
/// Continued fraction for E1, Ei(x) = -E1(-x), modified Lentz.
double expint_ei_continued_fraction(double x);
/// e^u E1(u) for u > 0 without forming e^u.
double scaled_e1(double u);

/// |x| at which expint_ei switches from the series to the continued fraction.
inline constexpr double kEiSeriesLimit = 2.0;

/// chi(x) = exp(x/(b rho)) Ei(-x/(b rho)), x > 0. Always negative.
double chi(double x, double b, double rho);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace antsel
