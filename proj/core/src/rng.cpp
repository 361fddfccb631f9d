#include "antsel/rng.hpp"

#include <cmath>

namespace antsel {

std::uint64_t stream_key(std::uint64_t seed, std::initializer_list<std::uint64_t> coords) {
  std::uint64_t k = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t c : coords) {
    k = mix64(k ^ mix64(c + 0x9e3779b97f4a7c15ULL));
  }
  return k;
}

double exponential_from_uniform(double u, double rate) { return -std::log1p(-u) / rate; }

double CounterStream::exponential(double rate) { return exponential_from_uniform(uniform01(), rate); }

}  // namespace antsel
