#include "antsel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "antsel/specfun.hpp"

namespace antsel {

namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the
// odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxIntervals = 4000;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One GK15 panel with the QUADPACK error heuristic.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_kron = std::fabs(kron);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    f1[static_cast<std::size_t>(j)] = f(center - dx);
    f2[static_cast<std::size_t>(j)] = f(center + dx);
    const double pair = f1[static_cast<std::size_t>(j)] + f2[static_cast<std::size_t>(j)];
    kron += kWgk[static_cast<std::size_t>(j)] * pair;
    abs_kron += kWgk[static_cast<std::size_t>(j)] *
                (std::fabs(f1[static_cast<std::size_t>(j)]) + std::fabs(f2[static_cast<std::size_t>(j)]));
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * pair;
  }
  const double mean = 0.5 * kron;
  double asc = kWgk[7] * std::fabs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }
  const double value = kron * half;
  asc *= std::fabs(half);
  abs_kron *= std::fabs(half);
  double err = std::fabs((kron - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = 2.220446049250313e-16;
  if (abs_kron > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * abs_kron, err);
  }
  return {a, b, value, err};
}

QuadratureResult run(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol) {
  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;
  int intervals = 1;
  while (error > std::max(abs_tol, rel_tol * std::fabs(total)) && intervals < kMaxIntervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // re-sum to shed the drift of the incremental updates
  CompensatedSum value;
  CompensatedSum err;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  QuadratureResult r{value.value(), err.value()};
  if (!std::isfinite(r.value) || r.error > std::max(abs_tol, rel_tol * std::fabs(r.value))) {
    throw QuadratureError("quadrature did not converge: estimate " + std::to_string(r.value) +
                              ", error estimate " + std::to_string(r.error),
                          r);
  }
  return r;
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double scale,
                                     double abs_tol, double rel_tol) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_half_line: scale must be positive");
  auto g = [&](double u) {
    const double w = 1.0 - u;
    if (w <= 0.0) return 0.0;
    const double x = scale * u / w;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx * scale / (w * w);
  };
  return run(g, 0.0, 1.0, abs_tol, rel_tol);
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol) {
  return run(f, a, b, abs_tol, rel_tol);
}

}  // namespace antsel
