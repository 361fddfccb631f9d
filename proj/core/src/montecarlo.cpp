#include "antsel/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "antsel/analysis.hpp"
#include "antsel/link_model.hpp"
#include "antsel/rng.hpp"
#include "antsel/selection.hpp"

namespace antsel {

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::NomaEs: return "NOMA_ES";
    case Scheme::Aia: return "AIA";
    case Scheme::A3: return "A3";
    case Scheme::NomaRan: return "NOMA_RAN";
    case Scheme::OmaEs: return "OMA_ES";
    case Scheme::AiaAnalytic: return "AIA_ANALYTIC";
    case Scheme::A3Analytic: return "A3_ANALYTIC";
  }
  return "?";
}

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::PsDbm: return "PS_DBM";
    case SweepAxis::NBs: return "N_BS";
    case SweepAxis::D2: return "D2";
    case SweepAxis::BCoeff: return "B_COEFF";
  }
  return "?";
}

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::optional<Scheme> parse_scheme(const std::string& name) {
  const std::string u = upper(name);
  for (Scheme s : kAllSchemes) {
    if (u == to_string(s)) return s;
  }
  return std::nullopt;
}

std::optional<SweepAxis> parse_axis(const std::string& name) {
  const std::string u = upper(name);
  for (SweepAxis a : {SweepAxis::PsDbm, SweepAxis::NBs, SweepAxis::D2, SweepAxis::BCoeff}) {
    if (u == to_string(a)) return a;
  }
  return std::nullopt;
}

bool is_analytic(Scheme s) { return s == Scheme::AiaAnalytic || s == Scheme::A3Analytic; }

void SweepSpec::validate() const {
  if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
  if (points.size() > 1) {
    const bool up = points[1] > points[0];
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (up ? !(points[i] > points[i - 1]) : !(points[i] < points[i - 1])) {
        throw std::invalid_argument("sweep points must be strictly monotone");
      }
    }
  }
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (schemes.empty()) throw std::invalid_argument("at least one scheme is required");
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    for (std::size_t j = i + 1; j < schemes.size(); ++j) {
      if (schemes[i] == schemes[j]) throw std::invalid_argument("duplicate scheme in sweep");
    }
  }
  if (axis == SweepAxis::NBs) {
    for (double v : points) {
      if (v < 1 || v != std::floor(v)) throw std::invalid_argument("N_BS points must be positive integers");
    }
  }
}

SystemParams params_at(const SweepSpec& spec, double point) {
  ScenarioConfig cfg = spec.base;
  switch (spec.axis) {
    case SweepAxis::PsDbm: cfg.ps_dbm = point; break;
    case SweepAxis::NBs: cfg.n_bs = static_cast<int>(point); break;
    case SweepAxis::D2: cfg.d2 = point; break;
    case SweepAxis::BCoeff: cfg.b = point; break;
  }
  return derive_params(cfg);
}

const SchemeStats* PointResult::find(Scheme s) const {
  for (const auto& st : schemes) {
    if (st.scheme == s) return &st;
  }
  return nullptr;
}

ChannelRealization sample_realization(const SystemParams& p, std::uint64_t trial_id,
                                      std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(p.n_bs);
  const auto m = static_cast<std::size_t>(p.n_ue1);
  const auto k = static_cast<std::size_t>(p.n_ue2);
  auto draw = [&](StreamTag tag, std::size_t r, std::size_t c, double rate) {
    CounterStream s(stream_key(seed, {trial_id, static_cast<std::uint64_t>(tag), r, c}));
    return s.exponential(rate);
  };
  ChannelRealization ch{GainMatrix(n, m), GainMatrix(n, k)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) ch.h(r, c) = draw(StreamTag::H, r, c, p.omega_h);
    for (std::size_t c = 0; c < k; ++c) ch.g(r, c) = draw(StreamTag::G, r, c, p.omega_g);
  }
  return ch;
}

namespace {

// Welford moments, merged with Chan's parallel update.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  static Moments merge(const Moments& a, const Moments& b) {
    if (a.n == 0.0) return b;
    if (b.n == 0.0) return a;
    Moments r;
    r.n = a.n + b.n;
    const double d = b.mean - a.mean;
    r.mean = a.mean + d * (b.n / r.n);
    r.m2 = a.m2 + b.m2 + d * d * (a.n * b.n / r.n);
    return r;
  }

  MetricStats stats() const {
    MetricStats s;
    s.mean = mean;
    s.std_error = n > 1.0 ? std::sqrt(m2 / (n - 1.0)) / std::sqrt(n) : 0.0;
    return s;
  }
};

struct SchemeMoments {
  Moments r_sum, r1, r2, eta;

  void push(const RateReport& r) {
    r_sum.push(r.r_sum);
    r1.push(r.r1);
    r2.push(r.r2);
    eta.push(r.eta);
  }

  static SchemeMoments merge(const SchemeMoments& a, const SchemeMoments& b) {
    return {Moments::merge(a.r_sum, b.r_sum), Moments::merge(a.r1, b.r1),
            Moments::merge(a.r2, b.r2), Moments::merge(a.eta, b.eta)};
  }
};

// Pairwise tree over blocks [lo, hi); shape depends only on the block count.
SchemeMoments tree_merge(const std::vector<SchemeMoments>& blocks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return blocks[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return SchemeMoments::merge(tree_merge(blocks, lo, mid), tree_merge(blocks, mid, hi));
}

struct BlockOutput {
  std::vector<SchemeMoments> per_scheme;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

RateReport evaluate(Scheme s, const ChannelRealization& ch, const SystemParams& p,
                    std::uint64_t trial, std::uint64_t seed) {
  switch (s) {
    case Scheme::NomaEs: {
      const auto r = exhaustive_search(ch, p);
      return noma_rates(ch.h(r.bs - 1, r.ue1 - 1), ch.g(r.bs - 1, r.ue2 - 1), p);
    }
    case Scheme::Aia: {
      const auto r = aia_select(ch);
      return noma_rates(ch.h(r.bs - 1, r.ue1 - 1), ch.g(r.bs - 1, r.ue2 - 1), p);
    }
    case Scheme::A3: {
      const auto r = a3_select(ch);
      return noma_rates(ch.h(r.bs - 1, r.ue1 - 1), ch.g(r.bs - 1, r.ue2 - 1), p);
    }
    case Scheme::NomaRan: {
      CounterStream stream(stream_key(seed, {trial, static_cast<std::uint64_t>(StreamTag::Random)}));
      const auto r = random_select(ch, stream);
      return noma_rates(ch.h(r.bs - 1, r.ue1 - 1), ch.g(r.bs - 1, r.ue2 - 1), p);
    }
    case Scheme::OmaEs: {
      const auto s2 = oma_select(ch);
      return oma_rates(s2.h_best, s2.g_best, p);
    }
    case Scheme::AiaAnalytic:
    case Scheme::A3Analytic:
      break;
  }
  throw std::logic_error("evaluate: analytic scheme has no per-trial rate");
}

BlockOutput run_block(const SweepSpec& spec, const SystemParams& p,
                      const std::vector<Scheme>& simulated, std::uint64_t first,
                      std::uint64_t last) {
  BlockOutput out;
  out.per_scheme.resize(simulated.size());
  const auto es_pos = std::find(simulated.begin(), simulated.end(), Scheme::NomaEs);
  const bool check = es_pos != simulated.end();
  const auto es_idx = static_cast<std::size_t>(es_pos - simulated.begin());

  std::vector<RateReport> reports(simulated.size());
  for (std::uint64_t t = first; t < last; ++t) {
    const ChannelRealization ch = sample_realization(p, t, spec.seed);
    for (std::size_t s = 0; s < simulated.size(); ++s) {
      reports[s] = evaluate(simulated[s], ch, p, t, spec.seed);
      out.per_scheme[s].push(reports[s]);
    }
    if (check) {
      for (std::size_t s = 0; s < simulated.size(); ++s) {
        if (s == es_idx || simulated[s] == Scheme::OmaEs) continue;
        ++out.checks;
        if (reports[s].r_sum > reports[es_idx].r_sum + 1e-12) ++out.violations;
      }
    }
  }
  return out;
}

SchemeStats analytic_stats(Scheme s, const SystemParams& p) {
  SchemeStats st;
  st.scheme = s;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  st.r1.mean = st.r2.mean = st.eta.mean = nan;
  try {
    st.r_sum.mean = (s == Scheme::AiaAnalytic) ? avg_sum_rate_aia(p) : avg_sum_rate_a3(p);
    if (low_snr_warning(p)) st.note = "low_snr";
  } catch (const std::exception& e) {
    st.skipped = true;
    st.r_sum.mean = nan;
    st.note = e.what();
  }
  return st;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  workers = std::max(1u, workers);

  std::vector<SystemParams> params;
  params.reserve(spec.points.size());
  for (double pt : spec.points) params.push_back(params_at(spec, pt));

  std::vector<Scheme> simulated;
  for (Scheme s : spec.schemes) {
    if (!is_analytic(s)) simulated.push_back(s);
  }

  const std::uint64_t blocks_per_point = (spec.trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  const std::size_t n_tasks = simulated.empty() ? 0 : spec.points.size() * blocks_per_point;
  std::vector<BlockOutput> outputs(n_tasks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    try {
      for (std::size_t task = next++; task < n_tasks; task = next++) {
        const std::size_t point = task / blocks_per_point;
        const std::uint64_t block = task % blocks_per_point;
        const std::uint64_t first = block * kTrialsPerBlock;
        const std::uint64_t last = std::min(spec.trials, first + kTrialsPerBlock);
        outputs[task] = run_block(spec, params[point], simulated, first, last);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_tasks;
    }
  };
  if (workers == 1 || n_tasks <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, n_tasks); ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  for (const auto& o : outputs) {
    result.dominance_checks += o.checks;
    result.dominance_violations += o.violations;
  }
  for (std::size_t pi = 0; pi < spec.points.size(); ++pi) {
    PointResult pr;
    pr.point = spec.points[pi];
    for (Scheme s : spec.schemes) {
      if (is_analytic(s)) {
        pr.schemes.push_back(analytic_stats(s, params[pi]));
        continue;
      }
      const auto si =
          static_cast<std::size_t>(std::find(simulated.begin(), simulated.end(), s) - simulated.begin());
      std::vector<SchemeMoments> blocks;
      blocks.reserve(blocks_per_point);
      for (std::uint64_t b = 0; b < blocks_per_point; ++b) {
        blocks.push_back(outputs[pi * blocks_per_point + b].per_scheme[si]);
      }
      const SchemeMoments total = tree_merge(blocks, 0, blocks.size());
      SchemeStats st;
      st.scheme = s;
      st.r_sum = total.r_sum.stats();
      st.r1 = total.r1.stats();
      st.r2 = total.r2.stats();
      st.eta = total.eta.stats();
      st.trials = spec.trials;
      pr.schemes.push_back(std::move(st));
    }
    result.points.push_back(std::move(pr));
  }
  return result;
}

}  // namespace antsel
