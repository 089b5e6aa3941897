#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace eigenent {

// Reproducible random stream: a 64-bit Mersenne twister whose state is
// seeded through SplitMix64, with uniforms and Gaussians produced by fixed
// transforms (53-bit mantissa fill, Box-Muller) so sequences do not depend on
// the standard library's distribution implementations.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed);

  // Independent substream for a task, e.g. derive(seed, {sector, sample}).
  static SeededSampler derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return position_; }

  std::uint64_t next_u64();
  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double gaussian();
  // Real and imaginary parts independent standard normals.
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace eigenent
