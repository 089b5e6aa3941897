#include "eigenent/spin_basis.hpp"

#include <bit>
#include <string>

#include "eigenent/errors.hpp"

namespace eigenent {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_sites(int n, int min_sites) {
  if (n < min_sites || n > kMaxSites) {
    throw DomainError("site count " + std::to_string(n) + " outside [" +
                      std::to_string(min_sites) + ", " +
                      std::to_string(kMaxSites) + "]");
  }
}

// Gosper's hack: next larger integer with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

int BasisState::up_count() const noexcept { return std::popcount(mask); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

MagnetizationSector enumerate_sector(int n, int j) {
  check_sites(n, 0);
  if (j < 0 || j > n) {
    throw DomainError("up-spin count " + std::to_string(j) +
                      " outside [0, " + std::to_string(n) + "]");
  }
  MagnetizationSector sector{n, j, {}};
  sector.states.reserve(binomial(n, j));
  if (j == 0) {
    sector.states.push_back({0});
    return sector;
  }
  const std::uint64_t limit = low_mask(n);
  std::uint64_t v = low_mask(j);
  while (true) {
    sector.states.push_back({v});
    if (v == (low_mask(j) << (n - j))) break;
    v = next_same_popcount(v);
    if (v > limit) break;
  }
  return sector;
}

BasisState cyclic_shift(BasisState state, int n) {
  const std::uint64_t top = (state.mask >> (n - 1)) & 1U;
  return {((state.mask << 1) & low_mask(n)) | top};
}

BasisState cyclic_shift(BasisState state, int n, int steps) {
  steps %= n;
  if (steps < 0) steps += n;
  if (steps == 0) return state;
  const std::uint64_t m = state.mask;
  return {((m << steps) | (m >> (n - steps))) & low_mask(n)};
}

std::vector<TranslationOrbit> translation_orbits(int n) {
  return build_orbit_lookup(n).orbits;
}

OrbitLookup build_orbit_lookup(int n) {
  check_sites(n, 1);
  if (n > 24) throw DomainError("orbit lookup table limited to 24 sites");
  const std::uint64_t dim = std::uint64_t{1} << n;
  OrbitLookup lookup;
  lookup.n = n;
  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  lookup.orbit_of.assign(dim, unassigned);
  lookup.shift_of.assign(dim, 0);

  // Ascending scan: the first unvisited mask of an orbit is its minimum.
  for (std::uint64_t mask = 0; mask < dim; ++mask) {
    if (lookup.orbit_of[mask] != unassigned) continue;
    const auto index = static_cast<std::uint32_t>(lookup.orbits.size());
    TranslationOrbit orbit;
    orbit.representative = {mask};
    BasisState s{mask};
    int t = 0;
    do {
      lookup.orbit_of[s.mask] = index;
      lookup.shift_of[s.mask] = static_cast<std::uint8_t>(t);
      s = cyclic_shift(s, n);
      ++t;
    } while (s.mask != mask);
    orbit.period = t;
    for (int k = 0; k < n; ++k) {
      if ((k * orbit.period) % n == 0) orbit.allowed_momenta.push_back(k);
    }
    lookup.orbits.push_back(std::move(orbit));
  }
  return lookup;
}

}  // namespace eigenent
