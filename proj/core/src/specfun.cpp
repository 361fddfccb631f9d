#include "antsel/specfun.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace antsel {

namespace {

constexpr std::uint64_t kExactIntegerLimit = 1ULL << 53;

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

// C(n, r) in uint64, 0 on overflow.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return 0;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

double lambda_coeff(int idx, int order) {
  if (order < 0 || idx < 0 || idx > order) {
    throw std::out_of_range("lambda_coeff: need 0 <= idx <= order, got idx=" +
                            std::to_string(idx) + " order=" + std::to_string(order));
  }
  const auto c = binomial_u64(static_cast<std::uint64_t>(order), static_cast<std::uint64_t>(idx));
  if (c == 0 || c > kExactIntegerLimit) {
    throw ExpansionTooLarge("lambda_coeff: C(" + std::to_string(order) + ", " +
                            std::to_string(idx) + ") exceeds exact integer range");
  }
  const double v = static_cast<double>(c);
  return (idx % 2 == 0) ? v : -v;
}

std::uint64_t composition_count(int n, int slots) {
  if (n < 0 || slots < 1) return 0;
  return binomial_u64(static_cast<std::uint64_t>(n + slots - 1),
                      static_cast<std::uint64_t>(slots - 1));
}

std::vector<ExpansionTerm> enumerate_terms(int n_minus_1, int m, int k, double omega_h,
                                           double omega_g, LambdaFn lambda) {
  if (n_minus_1 < 0 || m < 1 || k < 1) {
    throw std::invalid_argument("enumerate_terms: need N-1 >= 0 and M, K >= 1");
  }
  const int slots = m * k + 1;
  const std::uint64_t count = composition_count(n_minus_1, slots);
  if (count == 0 || count > kMaxExpansionTerms) {
    throw ExpansionTooLarge("expansion too large: " + std::to_string(n_minus_1) +
                            " into " + std::to_string(slots) + " parts");
  }

  // Per-slot base weight -lambda_i lambda_j and rate i Omega_h + j Omega_g.
  std::vector<double> weight(static_cast<std::size_t>(slots), 1.0);
  std::vector<double> rate(static_cast<std::size_t>(slots), 0.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= k; ++j) {
      const auto s = static_cast<std::size_t>((i - 1) * k + j);
      weight[s] = -lambda(i, m) * lambda(j, k);
      rate[s] = i * omega_h + j * omega_g;
    }
  }

  std::vector<ExpansionTerm> terms;
  terms.reserve(count);
  std::vector<int> comp(static_cast<std::size_t>(slots), 0);

  auto emit = [&]() {
    ExpansionTerm term;
    term.composition = comp;
    // multinomial as a product of binomials: C(l0, l0) C(l0+l1, l1) ...
    std::uint64_t c = 1;
    std::uint64_t running = 0;
    for (int part : comp) {
      running += static_cast<std::uint64_t>(part);
      const std::uint64_t b = binomial_u64(running, static_cast<std::uint64_t>(part));
      if (b == 0 || mul_overflows(c, b, c)) {
        throw ExpansionTooLarge("expansion too large: multinomial coefficient overflows");
      }
    }
    if (c > kExactIntegerLimit) {
      throw ExpansionTooLarge("expansion too large: multinomial coefficient exceeds 2^53");
    }
    term.c = c;
    double t = 1.0;
    double xi = 0.0;
    for (std::size_t s = 1; s < comp.size(); ++s) {
      for (int e = 0; e < comp[s]; ++e) t *= weight[s];
      xi += rate[s] * comp[s];
    }
    term.t = t;
    term.xi = xi;
    terms.push_back(std::move(term));
  };

  // lexicographic walk over compositions
  auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == comp.size()) {
      comp[slot] = remaining;
      emit();
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      comp[slot] = v;
      self(self, slot + 1, remaining - v);
    }
    comp[slot] = 0;
  };
  recurse(recurse, 0, n_minus_1);
  return terms;
}

double expint_ei_series(double x) {
  if (!(x < 0.0)) throw std::domain_error("expint_ei_series: x must be negative");
  CompensatedSum sum;
  double term = 1.0;  // x^n / n!
  for (int n = 1; n < 500; ++n) {
    term *= x / n;
    const double contrib = term / n;
    sum += contrib;
    if (std::fabs(contrib) < 1e-18 * std::fabs(sum.value())) break;
  }
  return kEulerGamma + std::log(-x) + sum.value();
}

double scaled_e1(double u) {
  if (!(u > 0.0)) throw std::domain_error("scaled_e1: u must be positive");
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double b = u + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw std::runtime_error("scaled_e1: continued fraction did not converge");
}

double expint_ei_continued_fraction(double x) {
  if (!(x < 0.0)) throw std::domain_error("expint_ei_continued_fraction: x must be negative");
  const double u = -x;
  return -scaled_e1(u) * std::exp(-u);
}

double expint_ei(double x) {
  if (!(x < 0.0)) throw std::domain_error("expint_ei: only the negative branch is supported");
  return (-x <= kEiSeriesLimit) ? expint_ei_series(x) : expint_ei_continued_fraction(x);
}

double chi(double x, double b, double rho) {
  if (!(x > 0.0)) throw std::domain_error("chi: x must be positive");
  const double u = x / (b * rho);
  if (u <= kEiSeriesLimit) return std::exp(u) * expint_ei_series(-u);
  return -scaled_e1(u);
}

}  // namespace antsel
