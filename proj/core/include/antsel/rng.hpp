#pragma once

#include <cstdint>
#include <initializer_list>

namespace antsel {

__extension__ using uint128_t = unsigned __int128;

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a seed and a list of coordinates (trial, tag, row, ...) into one
/// stream key. Different coordinate tuples give statistically unrelated keys.
std::uint64_t stream_key(std::uint64_t seed, std::initializer_list<std::uint64_t> coords);

/// Counter-based random stream: the n-th output is mix64(key + n * golden),
/// so any draw can be recomputed from (key, n) alone, independent of the
/// order in which other streams were consumed.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., n-1}; n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<uint128_t>(next_u64()) * n) >> 64);
  }

  /// Exponential with the given rate (mean 1/rate), by inverse CDF.
  double exponential(double rate);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Inverse CDF of Exponential(rate) at u in [0, 1).
double exponential_from_uniform(double u, double rate);

}  // namespace antsel
