#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antsel/channel.hpp"
#include "antsel/params.hpp"
#include "antsel/selection.hpp"
#include "antsel/specfun.hpp"

namespace antsel::validation {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Brute-force references, written independently of the staged selectors.

/// max_i min(max_m h[i,m], max_k g[i,k]) with the lowest-index triple attaining it.
Triple reference_max_min_max(const ChannelRealization& ch, double* gamma_w = nullptr);
/// Row of the global maximum over h and g (h wins ties), with the row argmaxes.
Triple reference_global_max(const ChannelRealization& ch, double* gamma_s = nullptr);

/// Random realizations with N, M, K drawn from 1..max_dim and unit-scale gains.
ChannelRealization random_realization(std::uint64_t seed, std::uint64_t index, int max_dim);

CheckResult check_selection_oracles(std::uint64_t realizations, std::uint64_t seed);
CheckResult check_es_dominance(std::uint64_t realizations, std::uint64_t seed);
CheckResult check_pdf_normalization();
CheckResult check_special_functions();

using ClosedFormFn = std::function<double(const SystemParams&)>;

/// Closed-form average sum rates vs quadrature over their own densities,
/// relative error <= 1e-6, grid N, M, K <= max_dim, rho in {1e6, 1e9, 1e12}.
CheckResult check_closed_form_vs_quadrature(const ClosedFormFn& aia_closed,
                                            const ClosedFormFn& a3_closed, int max_dim = 3);
CheckResult check_closed_form_vs_quadrature(int max_dim = 3);

/// sum_l C_l t_l e^{-xi_l x} against [F_{gamma_i^w}(x)]^{N-1} from the product
/// form, relative error <= 1e-9, N <= 5, M, K <= 3.
CheckResult check_expansion(LambdaFn lambda = &lambda_coeff);

/// Everything above at reduced sizes, in order.
std::vector<CheckResult> run_all();

}  // namespace antsel::validation
