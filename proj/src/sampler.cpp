#include "eigenent/sampler.hpp"

#include <cmath>
#include <numbers>

namespace eigenent {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SeededSampler::SeededSampler(std::uint64_t seed) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(seed)),
                    static_cast<std::uint32_t>(splitmix64(seed) >> 32),
                    static_cast<std::uint32_t>(splitmix64(seed ^ 0xA5A5A5A5ULL)),
                    static_cast<std::uint32_t>(splitmix64(seed ^ 0xA5A5A5A5ULL) >> 32)};
  engine_.seed(seq);
}

SeededSampler SeededSampler::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
  return SeededSampler(h);
}

std::uint64_t SeededSampler::next_u64() {
  ++position_;
  return engine_();
}

double SeededSampler::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededSampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SeededSampler::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u lies in (0, 1], so the logarithm is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

std::complex<double> SeededSampler::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

}  // namespace eigenent
