#pragma once

#include <functional>
#include <vector>

#include "antsel/params.hpp"
#include "antsel/specfun.hpp"

namespace antsel {

// ---------------------------------------------------------------------------
// Row-maximum distributions. A row maximum of `order` i.i.d. Exponential(omega)
// gains has CDF (1 - e^{-omega x})^order; the expanded forms use the signed
// binomial coefficients lambda_{i,order}.

double cdf_row_max(double x, double omega, int order);
double pdf_row_max(double x, double omega, int order);
double cdf_row_max_expanded(double x, double omega, int order);
double pdf_row_max_expanded(double x, double omega, int order);

double cdf_row_max_h(double x, const SystemParams& p);  // order M, rate omega_h
double cdf_row_max_g(double x, const SystemParams& p);  // order K, rate omega_g
double pdf_row_max_h(double x, const SystemParams& p);
double pdf_row_max_g(double x, const SystemParams& p);

/// CDF of min(h_i^max, g_i^max):
/// 1 - sum_{i=1..M} sum_{j=1..K} lambda_{i,M} lambda_{j,K} e^{-(i Omega_h + j Omega_g) x}.
double cdf_gamma_i_w(double x, const SystemParams& p);

// ---------------------------------------------------------------------------
// Strong-user gain under max-min-max selection.

/// Per-(i, j, term) contributions to the closed-form average sum rate, in nats
/// before the C t / ln 2 weighting.
struct AiaRateTerms {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
  double sum() const { return t1 + t2 + t3 + t4; }
};

AiaRateTerms aia_rate_terms(const ExpansionTerm& term, int i, int j, const SystemParams& p);

/// Distribution of gamma_s for max-min-max selection. Built once per parameter
/// set because the multinomial expansion is the expensive part.
///
/// With N = 1 there is no competing row, so the (N-1)-th power expansion
/// collapses to the constant 1 and the psi-form density vanishes identically;
/// the missing mass is restored by `empty_competitor_weight()`, which is 1 for
/// N = 1 and 0 otherwise (it equals sum_l C_l t_l).
class AiaDistribution {
 public:
  explicit AiaDistribution(const SystemParams& p);

  double pdf(double x) const;
  double cdf(double x) const;

  /// Closed-form high-SNR average sum rate (bits/s/Hz).
  double avg_sum_rate() const;

  const std::vector<ExpansionTerm>& terms() const { return terms_; }
  double empty_competitor_weight() const { return empty_weight_; }
  const SystemParams& params() const { return p_; }

 private:
  SystemParams p_;
  std::vector<ExpansionTerm> terms_;
  double empty_weight_ = 0.0;
};

double pdf_gamma_s_aia(double x, const SystemParams& p);
double cdf_gamma_s_aia(double x, const SystemParams& p);

/// Closed-form asymptotic average sum rate for max-min-max selection:
/// log2(1/b) + sum_{i,j,l} C_l t_l (T1 + T2 + T3 + T4) / ln 2, plus the N = 1
/// correction described at AiaDistribution.
double avg_sum_rate_aia(const SystemParams& p);

// ---------------------------------------------------------------------------
// Strong-user gain under max-max-max selection: the global maximum of N*M
// Exponential(omega_h) and N*K Exponential(omega_g) gains.

double cdf_gamma_s_a3(double x, const SystemParams& p);
/// Derivative of the product-form CDF; stable for any antenna counts.
double pdf_gamma_s_a3(double x, const SystemParams& p);
/// Double lambda-sum form. Subject to cancellation for large N*M, N*K.
double pdf_gamma_s_a3_expanded(double x, const SystemParams& p);

/// log2(1/b) + (1/ln 2) sum_{i,j} lambda_{i,NM} lambda_{j,NK}
///   (chi(i Omega_h + j Omega_g) - chi(i Omega_h) - chi(j Omega_g)).
double avg_sum_rate_a3(const SystemParams& p);

// ---------------------------------------------------------------------------

/// Natural integration scale for gamma_s densities: the larger mean gain.
double gain_scale(const SystemParams& p);

/// int_0^inf log2(1 + b rho x) pdf(x) dx + log2(1/b), by adaptive quadrature
/// on the mapped half line. Throws QuadratureError on non-convergence.
double quadrature_avg_rate(const std::function<double(double)>& pdf, const SystemParams& p,
                           double scale);
double quadrature_avg_rate(const std::function<double(double)>& pdf, const SystemParams& p);

/// True when rho * b * E[g-link gain] < 100, i.e. the weak-rate-constant
/// approximation behind the closed forms is poor. The weaker link's
/// single-antenna mean gain stands in for E[gamma_w].
bool low_snr_warning(const SystemParams& p);

}  // namespace antsel
