#include "antsel/selection.hpp"

#include <algorithm>

#include "antsel/link_model.hpp"

namespace antsel {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::ES: return "ES";
    case Algorithm::AIA: return "AIA";
    case Algorithm::A3: return "A3";
    case Algorithm::RAN: return "RAN";
  }
  return "?";
}

namespace {

// First position of the maximum; counts size-1 comparisons.
int argmax(std::span<const double> v, std::uint64_t& ops) {
  int best = 0;
  for (std::size_t j = 1; j < v.size(); ++j) {
    ++ops;
    if (v[j] > v[static_cast<std::size_t>(best)]) best = static_cast<int>(j);
  }
  return best;
}

// Shared stages 2 and 3. pick_smaller selects min(h_max, g_max) per row
// (max-min-max), otherwise the larger one (max-max-max).
SelectionResult staged_select(const ChannelRealization& ch, bool pick_smaller, Algorithm algo) {
  ch.check_consistent();
  std::uint64_t ops = 0;
  const RowMaxima rm = row_maxima(ch, &ops);
  const std::size_t n = rm.h_max.size();

  std::vector<double> stage2(n);
  for (std::size_t i = 0; i < n; ++i) {
    ++ops;
    const bool h_smaller = rm.h_max[i] < rm.g_max[i];
    stage2[i] = (h_smaller == pick_smaller) ? rm.h_max[i] : rm.g_max[i];
  }
  const auto row = static_cast<std::size_t>(argmax(stage2, ops));

  SelectionResult r;
  r.algorithm = algo;
  r.bs = static_cast<int>(row) + 1;
  r.ue1 = rm.h_arg[row] + 1;
  r.ue2 = rm.g_arg[row] + 1;
  r.op_count = ops;
  assign_gains(r, ch);
  return r;
}

}  // namespace

void assign_gains(SelectionResult& r, const ChannelRealization& ch) {
  const double h = ch.h(static_cast<std::size_t>(r.bs - 1), static_cast<std::size_t>(r.ue1 - 1));
  const double g = ch.g(static_cast<std::size_t>(r.bs - 1), static_cast<std::size_t>(r.ue2 - 1));
  r.strong_user = h >= g ? User::UE1 : User::UE2;
  r.gamma_s = std::max(h, g);
  r.gamma_w = std::min(h, g);
}

RowMaxima row_maxima(const ChannelRealization& ch, std::uint64_t* ops) {
  std::uint64_t count = 0;
  const std::size_t n = ch.n_bs();
  RowMaxima rm;
  rm.h_max.resize(n);
  rm.g_max.resize(n);
  rm.h_arg.resize(n);
  rm.g_arg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rm.h_arg[i] = argmax(ch.h.row(i), count);
    rm.g_arg[i] = argmax(ch.g.row(i), count);
    rm.h_max[i] = ch.h(i, static_cast<std::size_t>(rm.h_arg[i]));
    rm.g_max[i] = ch.g(i, static_cast<std::size_t>(rm.g_arg[i]));
  }
  if (ops) *ops += count;
  return rm;
}

SelectionResult exhaustive_search(const ChannelRealization& ch, const SystemParams& p) {
  ch.check_consistent();
  SelectionResult best;
  best.algorithm = Algorithm::ES;
  double best_rate = -1.0;
  std::uint64_t evals = 0;
  for (std::size_t i = 0; i < ch.n_bs(); ++i) {
    for (std::size_t m = 0; m < ch.n_ue1(); ++m) {
      for (std::size_t k = 0; k < ch.n_ue2(); ++k) {
        const double rate = noma_rates(ch.h(i, m), ch.g(i, k), p).r_sum;
        ++evals;
        if (rate > best_rate) {
          best_rate = rate;
          best.bs = static_cast<int>(i) + 1;
          best.ue1 = static_cast<int>(m) + 1;
          best.ue2 = static_cast<int>(k) + 1;
        }
      }
    }
  }
  best.op_count = evals;
  assign_gains(best, ch);
  return best;
}

SelectionResult aia_select(const ChannelRealization& ch) {
  return staged_select(ch, /*pick_smaller=*/true, Algorithm::AIA);
}

SelectionResult a3_select(const ChannelRealization& ch) {
  return staged_select(ch, /*pick_smaller=*/false, Algorithm::A3);
}

Triple random_triple(int n_bs, int n_ue1, int n_ue2, CounterStream& stream) {
  Triple t;
  t.bs = static_cast<int>(stream.uniform_index(static_cast<std::uint64_t>(n_bs))) + 1;
  t.ue1 = static_cast<int>(stream.uniform_index(static_cast<std::uint64_t>(n_ue1))) + 1;
  t.ue2 = static_cast<int>(stream.uniform_index(static_cast<std::uint64_t>(n_ue2))) + 1;
  return t;
}

SelectionResult random_select(const ChannelRealization& ch, CounterStream& stream) {
  ch.check_consistent();
  const Triple t = random_triple(static_cast<int>(ch.n_bs()), static_cast<int>(ch.n_ue1()),
                                 static_cast<int>(ch.n_ue2()), stream);
  SelectionResult r;
  r.algorithm = Algorithm::RAN;
  r.bs = t.bs;
  r.ue1 = t.ue1;
  r.ue2 = t.ue2;
  assign_gains(r, ch);
  return r;
}

OmaSelection oma_select(const ChannelRealization& ch) {
  ch.check_consistent();
  OmaSelection s;
  s.h_best = ch.h(0, 0);
  s.g_best = ch.g(0, 0);
  for (std::size_t i = 0; i < ch.n_bs(); ++i) {
    for (std::size_t m = 0; m < ch.n_ue1(); ++m) {
      if (ch.h(i, m) > s.h_best) {
        s.h_best = ch.h(i, m);
        s.h_bs = static_cast<int>(i) + 1;
        s.h_ue = static_cast<int>(m) + 1;
      }
    }
    for (std::size_t k = 0; k < ch.n_ue2(); ++k) {
      if (ch.g(i, k) > s.g_best) {
        s.g_best = ch.g(i, k);
        s.g_bs = static_cast<int>(i) + 1;
        s.g_ue = static_cast<int>(k) + 1;
      }
    }
  }
  return s;
}

}  // namespace antsel
