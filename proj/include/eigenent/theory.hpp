#pragma once

// Closed-form predictions for eigenstate and random-state entanglement:
// Page's mean entropy, the universal eigenstate formula, the upper bounds on
// eigenstate entropy, and the Gaussian asymptotics of the magnetization-sector
// model, together with erfc and the integrals they need.

#include <cstdint>
#include <string>

#include "eigenent/quadrature.hpp"

namespace eigenent {

// Mean entropy of a Haar-random state on C^dA (x) C^dB, 1 <= dA <= dB:
//   sum_{k=dB+1}^{dA dB} 1/k - (dA - 1) / (2 dB)
double page_entropy(std::uint64_t dA, std::uint64_t dB);

struct PageAsymptotic {
  double value = 0.0;
  // false when dA * dB is too small for the O(1/(dA dB)) remainder to be small
  bool in_regime = true;
};

// ln dA - dA / (2 dB)
PageAsymptotic page_asymptotic(std::uint64_t dA, std::uint64_t dB);

// Conjectured thermodynamic-limit eigenstate entropy for a cut of m = f n
// spins: m ln 2 + ln(1-f)/2 - (2/pi) [f == 1/2]. f > 1/2 is reflected.
double universal_entropy(int n, double f);
// Sub-leading deficit min(f,1-f) n ln 2 - S, i.e. -ln(1-f)/2 + (2/pi)[f == 1/2].
double universal_correction(double f);

// Upper bound on the entropy of one eigenstate with energy E of a chain with
// unit-norm local terms; m must be even and m <= n/2.
double lemma_bound(int m, int n, double energy);

// Upper bound on the eigenstate-averaged entropy: m ln 2 - f <H_1^2> / (4 ||H_1||^2).
double theorem_bound(int m, int n, double moment, double norm);

struct BoundReport {
  std::string name;
  double bound = 0.0;
  double measured = 0.0;
  double slack = 0.0;
  bool pass = false;
};

inline constexpr double kBoundSlackTolerance = 1e-9;

BoundReport make_bound_report(std::string name, double bound, double measured);

// Largest Shannon entropy among the three extremal two-site distributions
// compatible with a local energy eps, |eps| <= 1.
double appendix_a_candidates(double eps);
// 2 ln 2 - eps^2 / 2
double two_site_bound(double eps);

double erfc(double x);
// e^{x^2} erfc(x), finite for all x >= 0.
double erfc_scaled(double x);

struct AsymptoticParams {
  int n = 0;
  int m = 0;
  double f = 0.0;
  int j = 0;
  int k = 0;
  double J = 0.0;  // j / sqrt(n) - sqrt(n) / 2
  double K = 0.0;  // k / sqrt(n) - f sqrt(n) / 2
};

AsymptoticParams make_asymptotic_params(int n, int m, int j, int k);

// Sector entropy for 0 < f < 1/2: f n ln 2 + f (1 - 4 J^2) / 2 + ln(1-f)/2.
double sector_entropy_flt_half(int n, double f, double J);
// Sector entropy at f = 1/2 (J is reflected to -|J|):
//   (n-1)/2 ln 2 + 1/4 + J sqrt(2/pi) - J^2 - e^{2J^2} erfc(-sqrt(2) J) / 2
double sector_entropy_half(int n, double J);

// e^{-2J^2} (1/4 + J sqrt(2/pi) - J^2 - e^{2J^2} erfc(-sqrt(2) J) / 2), J <= 0.
double half_filling_integrand(double J);

// Integral of e^{-2J^2} (1 - 4J^2) over [-8, 8].
QuadratureResult gaussian_moment_integral(double abs_tol = 1e-9);
// sqrt(8/pi) * integral over [-8, 0] of the Gaussian-weighted f = 1/2 sector
// correction; the thermodynamic-limit value is -2/pi.
QuadratureResult half_filling_sector_integral(double abs_tol = 1e-9);

struct SectorAverage {
  double correction = 0.0;  // S - m ln 2 in the thermodynamic limit
  double error_estimate = 0.0;
};

// Gaussian average of the sector entropies, returned relative to m ln 2.
SectorAverage average_over_sectors(double f, double abs_tol = 1e-9);

}  // namespace eigenent
