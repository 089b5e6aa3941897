#pragma once

// Computational basis of a periodic chain of n spin-1/2's.
//
// Spin i (1-based) lives in bit (i-1) of the mask; a set bit means spin up.
// Subsystem A = spins 1..m is therefore the m low-order bits, so a state
// vector reshaped column-major into 2^m x 2^(n-m) has A-bits as row index.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eigenent {

// Largest chain handled by the enumeration routines. Masks are 64-bit, but a
// full 2^n table beyond 32 sites is meaningless on any machine.
inline constexpr int kMaxSites = 32;

struct BasisState {
  std::uint64_t mask = 0;

  int up_count() const noexcept;
  bool spin_up(int site) const noexcept { return (mask >> (site - 1)) & 1U; }

  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

struct MagnetizationSector {
  int n = 0;
  int j = 0;
  std::vector<BasisState> states;

  std::size_t size() const noexcept { return states.size(); }
};

struct TranslationOrbit {
  BasisState representative;
  int period = 0;
  // k in [0, n) with k * period = 0 (mod n)
  std::vector<int> allowed_momenta;
};

// Maps every mask of a chain to its translation orbit: mask = T^shift(rep).
struct OrbitLookup {
  int n = 0;
  std::vector<TranslationOrbit> orbits;
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint8_t> shift_of;
};

std::uint64_t binomial(int n, int k);

MagnetizationSector enumerate_sector(int n, int j);

// Rotates spin i -> i+1 (bit i-1 -> bit i), spin n wraps to spin 1.
BasisState cyclic_shift(BasisState state, int n);
BasisState cyclic_shift(BasisState state, int n, int steps);

std::vector<TranslationOrbit> translation_orbits(int n);

OrbitLookup build_orbit_lookup(int n);

}  // namespace eigenent
