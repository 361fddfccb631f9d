#include "antsel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antsel/quadrature.hpp"

namespace antsel {

namespace {

// int_0^x e^{-c t} dt
double exp_integral_0x(double c, double x) { return -std::expm1(-c * x) / c; }

// psi(mu1, mu2) = e^{-mu1 x} ((e^{-mu2 x} - 1)/mu2 - (e^{-(mu2+xi) x} - 1)/(mu2 + xi))
double psi(double mu1, double mu2, double xi, double x) {
  if (xi == 0.0) return 0.0;
  return std::exp(-mu1 * x) *
         (std::expm1(-mu2 * x) / mu2 - std::expm1(-(mu2 + xi) * x) / (mu2 + xi));
}

// int_0^x psi(mu1, mu2)(t) dt
double psi_integral(double mu1, double mu2, double xi, double x) {
  if (xi == 0.0) return 0.0;
  const double e1 = exp_integral_0x(mu1, x);
  return (exp_integral_0x(mu1 + mu2, x) - e1) / mu2 -
         (exp_integral_0x(mu1 + mu2 + xi, x) - e1) / (mu2 + xi);
}

void require_nonnegative(double x) {
  if (!(x >= 0.0)) throw std::domain_error("distribution argument must be nonnegative");
}

}  // namespace

double cdf_row_max(double x, double omega, int order) {
  require_nonnegative(x);
  return std::pow(-std::expm1(-omega * x), order);
}

double pdf_row_max(double x, double omega, int order) {
  require_nonnegative(x);
  return order * omega * std::exp(-omega * x) * std::pow(-std::expm1(-omega * x), order - 1);
}

double cdf_row_max_expanded(double x, double omega, int order) {
  require_nonnegative(x);
  CompensatedSum s;
  for (int i = 0; i <= order; ++i) s += lambda_coeff(i, order) * std::exp(-i * omega * x);
  return s.value();
}

double pdf_row_max_expanded(double x, double omega, int order) {
  require_nonnegative(x);
  CompensatedSum s;
  for (int i = 1; i <= order; ++i) {
    s += -i * omega * lambda_coeff(i, order) * std::exp(-i * omega * x);
  }
  return s.value();
}

double cdf_row_max_h(double x, const SystemParams& p) { return cdf_row_max(x, p.omega_h, p.n_ue1); }
double cdf_row_max_g(double x, const SystemParams& p) { return cdf_row_max(x, p.omega_g, p.n_ue2); }
double pdf_row_max_h(double x, const SystemParams& p) { return pdf_row_max(x, p.omega_h, p.n_ue1); }
double pdf_row_max_g(double x, const SystemParams& p) { return pdf_row_max(x, p.omega_g, p.n_ue2); }

double cdf_gamma_i_w(double x, const SystemParams& p) {
  require_nonnegative(x);
  CompensatedSum s;
  s += 1.0;
  for (int i = 1; i <= p.n_ue1; ++i) {
    for (int j = 1; j <= p.n_ue2; ++j) {
      s += -lambda_coeff(i, p.n_ue1) * lambda_coeff(j, p.n_ue2) *
           std::exp(-(i * p.omega_h + j * p.omega_g) * x);
    }
  }
  return s.value();
}

// ---------------------------------------------------------------------------

AiaRateTerms aia_rate_terms(const ExpansionTerm& term, int i, int j, const SystemParams& p) {
  const double lam = lambda_coeff(i, p.n_ue1) * lambda_coeff(j, p.n_ue2);
  const double mu_h = i * p.omega_h;
  const double mu_g = j * p.omega_g;
  const double xi = term.xi;
  const double zeta_t = p.n_bs * lam;          // zeta-tilde_ij
  const double zeta = zeta_t * mu_h * mu_g;    // zeta_ij
  const double phi_i = mu_h + xi;
  const double phi_j = mu_g + xi;
  const double phi1 = mu_h + mu_g + xi;
  const double phi2 = mu_h + mu_g + 2.0 * xi;

  AiaRateTerms t;
  if (xi != 0.0) {
    t.t1 = xi * zeta_t / phi_i * chi(mu_g, p.b, p.rho);
    t.t2 = xi * zeta_t / phi_j * chi(mu_h, p.b, p.rho);
  }
  t.t3 = zeta * phi2 * chi(phi1, p.b, p.rho) / (phi_i * phi_j * phi1);
  t.t4 = -zeta_t * chi(mu_h + mu_g, p.b, p.rho);
  return t;
}

AiaDistribution::AiaDistribution(const SystemParams& p)
    : p_(p),
      terms_(enumerate_terms(p.n_bs - 1, p.n_ue1, p.n_ue2, p.omega_h, p.omega_g)),
      empty_weight_(p.n_bs == 1 ? 1.0 : 0.0) {}

double AiaDistribution::pdf(double x) const {
  require_nonnegative(x);
  CompensatedSum s;
  for (int i = 1; i <= p_.n_ue1; ++i) {
    const double mu_h = i * p_.omega_h;
    for (int j = 1; j <= p_.n_ue2; ++j) {
      const double mu_g = j * p_.omega_g;
      const double zeta = p_.n_bs * i * j * p_.omega_h * p_.omega_g *
                          lambda_coeff(i, p_.n_ue1) * lambda_coeff(j, p_.n_ue2);
      for (const auto& term : terms_) {
        if (term.xi == 0.0) continue;
        const double w = static_cast<double>(term.c) * term.t * zeta;
        s += w * (psi(mu_h, mu_g, term.xi, x) + psi(mu_g, mu_h, term.xi, x));
      }
    }
  }
  if (empty_weight_ != 0.0) {
    s += empty_weight_ * p_.n_bs *
         (pdf_row_max_h(x, p_) * cdf_row_max_g(x, p_) + pdf_row_max_g(x, p_) * cdf_row_max_h(x, p_));
  }
  return s.value();
}

double AiaDistribution::cdf(double x) const {
  require_nonnegative(x);
  CompensatedSum s;
  for (int i = 1; i <= p_.n_ue1; ++i) {
    const double mu_h = i * p_.omega_h;
    for (int j = 1; j <= p_.n_ue2; ++j) {
      const double mu_g = j * p_.omega_g;
      const double zeta = p_.n_bs * i * j * p_.omega_h * p_.omega_g *
                          lambda_coeff(i, p_.n_ue1) * lambda_coeff(j, p_.n_ue2);
      for (const auto& term : terms_) {
        if (term.xi == 0.0) continue;
        const double w = static_cast<double>(term.c) * term.t * zeta;
        s += w * (psi_integral(mu_h, mu_g, term.xi, x) + psi_integral(mu_g, mu_h, term.xi, x));
      }
    }
  }
  if (empty_weight_ != 0.0) {
    s += empty_weight_ * p_.n_bs * cdf_row_max_h(x, p_) * cdf_row_max_g(x, p_);
  }
  return s.value();
}

double AiaDistribution::avg_sum_rate() const {
  CompensatedSum s;
  for (int i = 1; i <= p_.n_ue1; ++i) {
    for (int j = 1; j <= p_.n_ue2; ++j) {
      for (const auto& term : terms_) {
        s += static_cast<double>(term.c) * term.t * aia_rate_terms(term, i, j, p_).sum();
      }
      if (empty_weight_ != 0.0) {
        const double mu_h = i * p_.omega_h;
        const double mu_g = j * p_.omega_g;
        const double zeta_t = p_.n_bs * lambda_coeff(i, p_.n_ue1) * lambda_coeff(j, p_.n_ue2);
        s += empty_weight_ * zeta_t *
             (chi(mu_h + mu_g, p_.b, p_.rho) - chi(mu_h, p_.b, p_.rho) - chi(mu_g, p_.b, p_.rho));
      }
    }
  }
  return std::log2(1.0 / p_.b) + s.value() / std::numbers::ln2;
}

double pdf_gamma_s_aia(double x, const SystemParams& p) { return AiaDistribution(p).pdf(x); }
double cdf_gamma_s_aia(double x, const SystemParams& p) { return AiaDistribution(p).cdf(x); }
double avg_sum_rate_aia(const SystemParams& p) { return AiaDistribution(p).avg_sum_rate(); }

// ---------------------------------------------------------------------------

double cdf_gamma_s_a3(double x, const SystemParams& p) {
  return cdf_row_max(x, p.omega_h, p.n_bs * p.n_ue1) * cdf_row_max(x, p.omega_g, p.n_bs * p.n_ue2);
}

double pdf_gamma_s_a3(double x, const SystemParams& p) {
  const int nm = p.n_bs * p.n_ue1;
  const int nk = p.n_bs * p.n_ue2;
  return pdf_row_max(x, p.omega_h, nm) * cdf_row_max(x, p.omega_g, nk) +
         cdf_row_max(x, p.omega_h, nm) * pdf_row_max(x, p.omega_g, nk);
}

double pdf_gamma_s_a3_expanded(double x, const SystemParams& p) {
  require_nonnegative(x);
  const int nm = p.n_bs * p.n_ue1;
  const int nk = p.n_bs * p.n_ue2;
  CompensatedSum s;
  for (int i = 1; i <= nm; ++i) {
    const double mu_h = i * p.omega_h;
    for (int j = 1; j <= nk; ++j) {
      const double mu_g = j * p.omega_g;
      const double lam = lambda_coeff(i, nm) * lambda_coeff(j, nk);
      s += lam * (mu_h * std::exp(-mu_h * x) + mu_g * std::exp(-mu_g * x) -
                  (mu_h + mu_g) * std::exp(-(mu_h + mu_g) * x));
    }
  }
  return s.value();
}

double avg_sum_rate_a3(const SystemParams& p) {
  const int nm = p.n_bs * p.n_ue1;
  const int nk = p.n_bs * p.n_ue2;
  std::vector<double> chi_h(static_cast<std::size_t>(nm) + 1);
  std::vector<double> chi_g(static_cast<std::size_t>(nk) + 1);
  for (int i = 1; i <= nm; ++i) chi_h[static_cast<std::size_t>(i)] = chi(i * p.omega_h, p.b, p.rho);
  for (int j = 1; j <= nk; ++j) chi_g[static_cast<std::size_t>(j)] = chi(j * p.omega_g, p.b, p.rho);

  CompensatedSum s;
  for (int i = 1; i <= nm; ++i) {
    for (int j = 1; j <= nk; ++j) {
      const double lam = lambda_coeff(i, nm) * lambda_coeff(j, nk);
      s += lam * (chi(i * p.omega_h + j * p.omega_g, p.b, p.rho) -
                  chi_h[static_cast<std::size_t>(i)] - chi_g[static_cast<std::size_t>(j)]);
    }
  }
  return std::log2(1.0 / p.b) + s.value() / std::numbers::ln2;
}

// ---------------------------------------------------------------------------

double gain_scale(const SystemParams& p) { return 1.0 / std::min(p.omega_h, p.omega_g); }

double quadrature_avg_rate(const std::function<double(double)>& pdf, const SystemParams& p,
                           double scale) {
  const double br = p.b * p.rho;
  auto integrand = [&](double x) {
    const double f = pdf(x);
    return f == 0.0 ? 0.0 : std::log1p(br * x) * f;
  };
  const QuadratureResult r = integrate_half_line(integrand, scale, 1e-9 * std::numbers::ln2);
  return r.value / std::numbers::ln2 + std::log2(1.0 / p.b);
}

double quadrature_avg_rate(const std::function<double(double)>& pdf, const SystemParams& p) {
  return quadrature_avg_rate(pdf, p, gain_scale(p));
}

bool low_snr_warning(const SystemParams& p) {
  const double weak_mean = 1.0 / std::max(p.omega_h, p.omega_g);
  return p.rho * p.b * weak_mean < 100.0;
}

}  // namespace antsel
