#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace antsel {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

/// Integrates f over [0, inf) after substituting x = scale * u / (1 - u),
/// which maps the half line onto [0, 1) with the bulk of the mass near
/// u = 1/2 when `scale` matches the integrand's characteristic width.
/// Globally adaptive Gauss-Kronrod (7/15 points) with bisection of the worst panel. Throws QuadratureError
/// when the estimated absolute error exceeds max(abs_tol, rel_tol * |I|).
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double scale,
                                     double abs_tol = 1e-9, double rel_tol = 1e-11);

/// Same rule on a finite interval [a, b].
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-9, double rel_tol = 1e-11);

}  // namespace antsel
