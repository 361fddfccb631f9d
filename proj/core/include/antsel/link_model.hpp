#pragma once

#include "antsel/params.hpp"

namespace antsel {

/// Achievable rates (bits/s/Hz) for one antenna triple.
struct RateReport {
  double r1 = 0.0;
  double r2 = 0.0;
  double r_sum = 0.0;
  double eta = 1.0;    // Jain fairness index
  bool delta = true;   // true iff UE1 holds the stronger channel (h >= g)
};

/// NOMA rates with SIC at the strong user. The strong user gets
/// log2(1 + rho*b*gamma_s); the weak user decodes its own signal treating the
/// strong user's as noise. Ties (h == g) make UE1 the strong user.
RateReport noma_rates(double h_sel, double g_sel, const SystemParams& p);

/// Strong-user rate log2(1 + rho*b*gamma).
double noma_strong_rate(double gamma_s, const SystemParams& p);

/// Weak-user rate log2(1 + a*gamma/(b*gamma + 1/rho)); saturates at log2(1/b).
double noma_weak_rate(double gamma_w, const SystemParams& p);

/// (r1 + r2)^2 / (2 (r1^2 + r2^2)); 1 when both rates are zero.
double jain_index(double r1, double r2);

/// Orthogonal baseline. Each user is served alone, at full power, on its own
/// share of the time-frequency resource: the user with the larger best gain
/// gets share a, the other gets share b. Rates are share * log2(1 + rho*gamma).
RateReport oma_rates(double h_best, double g_best, const SystemParams& p);

}  // namespace antsel
