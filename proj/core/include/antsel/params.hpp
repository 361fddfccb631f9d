#pragma once

#include <stdexcept>
#include <string>

namespace antsel {

/// Raw scenario constants as a user writes them (powers in dBm, distances in meters).
/// Defaults are the reference two-user setup: N=2, M=K=2, d1=30 m, d2=100 m,
/// alpha=3, a=0.6, b=0.4, sigma=-70 dBm.
struct ScenarioConfig {
  int n_bs = 2;
  int n_ue1 = 2;
  int n_ue2 = 2;
  double d1 = 30.0;
  double d2 = 100.0;
  double alpha = 3.0;
  double b = 0.4;
  double ps_dbm = 20.0;
  double sigma_dbm = -70.0;
};

/// Fully derived scenario. Everything downstream of derive_params() is linear.
struct SystemParams {
  int n_bs = 0;   // N
  int n_ue1 = 0;  // M
  int n_ue2 = 0;  // K
  double d1 = 0.0;
  double d2 = 0.0;
  double alpha = 0.0;
  double a = 0.0;  // power fraction of the weak user, a = 1 - b
  double b = 0.0;  // power fraction of the strong user
  double ps_dbm = 0.0;
  double sigma_dbm = 0.0;
  double rho = 0.0;      // transmit SNR Ps / sigma^2, linear
  double omega_h = 0.0;  // 1 / E[h] = d1^alpha
  double omega_g = 0.0;  // 1 / E[g] = d2^alpha
};

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Validates the raw constants and computes rho, a, omega_h and omega_g.
/// Throws ParamError when b is outside (0, 0.5), when a distance or the
/// path-loss exponent is not positive, or when an antenna count is < 1.
SystemParams derive_params(const ScenarioConfig& cfg);

double dbm_to_linear_ratio(double num_dbm, double den_dbm);

}  // namespace antsel
