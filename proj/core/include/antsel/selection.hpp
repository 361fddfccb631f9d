#pragma once

#include <cstdint>
#include <vector>

#include "antsel/channel.hpp"
#include "antsel/params.hpp"
#include "antsel/rng.hpp"

namespace antsel {

enum class Algorithm { ES, AIA, A3, RAN };
enum class User { UE1, UE2 };

const char* to_string(Algorithm a);

/// Chosen antenna triple. Antenna indices are 1-based, as in the system model.
///
/// op_count counts one unit per scalar comparison made while selecting, except
/// for exhaustive search, which counts one unit per sum-rate evaluation.
struct SelectionResult {
  int bs = 1;   // i in 1..N
  int ue1 = 1;  // m in 1..M
  int ue2 = 1;  // k in 1..K
  double gamma_s = 0.0;
  double gamma_w = 0.0;
  User strong_user = User::UE1;
  Algorithm algorithm = Algorithm::ES;
  std::uint64_t op_count = 0;
};

/// Per-row maxima of h and g with their (0-based) column positions.
struct RowMaxima {
  std::vector<double> h_max;
  std::vector<double> g_max;
  std::vector<int> h_arg;
  std::vector<int> g_arg;
};

/// Stage 1 shared by both heuristics. Adds the comparisons made to *ops when given.
RowMaxima row_maxima(const ChannelRealization& ch, std::uint64_t* ops = nullptr);

/// Maximizes the NOMA sum rate over all N*M*K triples. Ties go to the
/// lexicographically smallest (i, m, k).
SelectionResult exhaustive_search(const ChannelRealization& ch, const SystemParams& p);

/// Max-min-max selection: picks the BS antenna whose weaker row maximum is largest.
SelectionResult aia_select(const ChannelRealization& ch);

/// Max-max-max selection: picks the BS antenna holding the global best gain.
SelectionResult a3_select(const ChannelRealization& ch);

struct Triple {
  int bs = 1;
  int ue1 = 1;
  int ue2 = 1;
};

/// Uniform independent draw of (i, m, k), 1-based.
Triple random_triple(int n_bs, int n_ue1, int n_ue2, CounterStream& stream);

/// Random selection on a realization; op_count is 0.
SelectionResult random_select(const ChannelRealization& ch, CounterStream& stream);

/// Per-user best gains used by the orthogonal baseline. Each user pairs its own
/// best BS antenna with its best receive antenna; the two may use different BS antennas.
struct OmaSelection {
  double h_best = 0.0;
  int h_bs = 1;
  int h_ue = 1;
  double g_best = 0.0;
  int g_bs = 1;
  int g_ue = 1;
};

OmaSelection oma_select(const ChannelRealization& ch);

/// Fills gamma_s, gamma_w and strong_user from the stored triple.
void assign_gains(SelectionResult& r, const ChannelRealization& ch);

}  // namespace antsel
