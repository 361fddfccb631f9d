#include "antsel/params.hpp"

#include <cmath>

namespace antsel {

double dbm_to_linear_ratio(double num_dbm, double den_dbm) {
  return std::pow(10.0, (num_dbm - den_dbm) / 10.0);
}

SystemParams derive_params(const ScenarioConfig& cfg) {
  if (cfg.n_bs < 1 || cfg.n_ue1 < 1 || cfg.n_ue2 < 1) {
    throw ParamError("antenna counts must be positive");
  }
  if (!(cfg.d1 > 0.0) || !(cfg.d2 > 0.0) || !std::isfinite(cfg.d1) || !std::isfinite(cfg.d2)) {
    throw ParamError("distances must be positive and finite");
  }
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) {
    throw ParamError("path-loss exponent must be positive and finite");
  }
  if (!(cfg.b > 0.0 && cfg.b < 0.5)) {
    throw ParamError("power split violates a > b: b must lie in (0, 0.5), got " +
                     std::to_string(cfg.b));
  }
  if (!std::isfinite(cfg.ps_dbm) || !std::isfinite(cfg.sigma_dbm)) {
    throw ParamError("transmit and noise powers must be finite");
  }

  SystemParams p;
  p.n_bs = cfg.n_bs;
  p.n_ue1 = cfg.n_ue1;
  p.n_ue2 = cfg.n_ue2;
  p.d1 = cfg.d1;
  p.d2 = cfg.d2;
  p.alpha = cfg.alpha;
  p.b = cfg.b;
  p.a = 1.0 - cfg.b;
  p.ps_dbm = cfg.ps_dbm;
  p.sigma_dbm = cfg.sigma_dbm;
  p.rho = dbm_to_linear_ratio(cfg.ps_dbm, cfg.sigma_dbm);
  p.omega_h = std::pow(cfg.d1, cfg.alpha);
  p.omega_g = std::pow(cfg.d2, cfg.alpha);
  return p;
}

}  // namespace antsel
