#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antsel/channel.hpp"
#include "antsel/params.hpp"

namespace antsel {

enum class Scheme { NomaEs, Aia, A3, NomaRan, OmaEs, AiaAnalytic, A3Analytic };
enum class SweepAxis { PsDbm, NBs, D2, BCoeff };

inline constexpr Scheme kAllSchemes[] = {Scheme::NomaEs,  Scheme::Aia,   Scheme::A3,
                                         Scheme::NomaRan, Scheme::OmaEs, Scheme::AiaAnalytic,
                                         Scheme::A3Analytic};

const char* to_string(Scheme s);
const char* to_string(SweepAxis a);
std::optional<Scheme> parse_scheme(const std::string& name);
std::optional<SweepAxis> parse_axis(const std::string& name);
bool is_analytic(Scheme s);

struct SweepSpec {
  ScenarioConfig base;
  SweepAxis axis = SweepAxis::PsDbm;
  std::vector<double> points;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 2024;
  std::vector<Scheme> schemes;

  /// Throws std::invalid_argument on an empty or non-monotone point list,
  /// zero trials, or no schemes.
  void validate() const;
};

/// Scenario at one sweep point. The b axis sets a = 1 - b.
SystemParams params_at(const SweepSpec& spec, double point);

/// Sample statistics of one metric.
struct MetricStats {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(trials)
};

struct SchemeStats {
  Scheme scheme = Scheme::NomaEs;
  MetricStats r_sum;
  MetricStats r1;
  MetricStats r2;
  MetricStats eta;
  std::uint64_t trials = 0;  // 0 for analytic schemes
  bool skipped = false;
  std::string note;          // reason when skipped, low-SNR flag for analytic rows
};

struct PointResult {
  double point = 0.0;
  std::vector<SchemeStats> schemes;  // in SweepSpec::schemes order

  const SchemeStats* find(Scheme s) const;
};

struct SweepResult {
  std::vector<PointResult> points;
  std::uint64_t dominance_checks = 0;
  std::uint64_t dominance_violations = 0;  // heuristic beat exhaustive search by > 1e-12
};

/// Stream-tag constants for counter-based keys.
enum class StreamTag : std::uint64_t { H = 1, G = 2, Random = 3 };

/// i.i.d. exponential gains; every entry is a pure function of
/// (seed, trial_id, matrix, row, col).
ChannelRealization sample_realization(const SystemParams& p, std::uint64_t trial_id,
                                      std::uint64_t seed);

/// Runs every (point, trial, scheme). Results are bit-identical for any
/// `workers` because trials are reduced in fixed-size blocks merged in a
/// fixed pairwise tree.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1);

inline constexpr std::uint64_t kTrialsPerBlock = 4096;

}  // namespace antsel
