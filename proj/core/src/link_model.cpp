#include "antsel/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace antsel {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

}  // namespace

double noma_strong_rate(double gamma_s, const SystemParams& p) {
  return log2_1p(p.rho * p.b * gamma_s);
}

double noma_weak_rate(double gamma_w, const SystemParams& p) {
  // a*gamma/(b*gamma + 1/rho) rewritten with rho in the numerator to keep
  // 1/rho from underflowing against gamma at very high SNR.
  const double snr = p.rho * gamma_w;
  return log2_1p(p.a * snr / (p.b * snr + 1.0));
}

double jain_index(double r1, double r2) {
  const double sq = r1 * r1 + r2 * r2;
  if (sq == 0.0) return 1.0;
  const double s = r1 + r2;
  return s * s / (2.0 * sq);
}

RateReport noma_rates(double h_sel, double g_sel, const SystemParams& p) {
  RateReport r;
  r.delta = h_sel >= g_sel;
  const double strong = noma_strong_rate(std::max(h_sel, g_sel), p);
  const double weak = noma_weak_rate(std::min(h_sel, g_sel), p);
  r.r1 = r.delta ? strong : weak;
  r.r2 = r.delta ? weak : strong;
  r.r_sum = r.r1 + r.r2;
  r.eta = jain_index(r.r1, r.r2);
  return r;
}

RateReport oma_rates(double h_best, double g_best, const SystemParams& p) {
  RateReport r;
  r.delta = h_best >= g_best;
  const double share_h = r.delta ? p.a : p.b;
  const double share_g = r.delta ? p.b : p.a;
  r.r1 = share_h * log2_1p(p.rho * h_best);
  r.r2 = share_g * log2_1p(p.rho * g_best);
  r.r_sum = r.r1 + r.r2;
  r.eta = jain_index(r.r1, r.r2);
  return r;
}

}  // namespace antsel
