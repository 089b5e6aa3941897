#include "eigenent/theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "eigenent/errors.hpp"

namespace eigenent {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

void check_fraction(double f) {
  if (!(f > 0.0 && f < 1.0)) throw DomainError("subsystem fraction must lie in (0, 1)");
}

double shannon(const std::array<double, 4>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

// erf(x) = 2/sqrt(pi) e^{-x^2} sum_k 2^k x^{2k+1} / (2k+1)!!; all terms positive.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= 2.0 * x2 / (2.0 * k + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 / std::sqrt(kPi) * std::exp(-x2) * sum;
}

// Continued fraction for sqrt(pi) e^{x^2} erfc(x), x > 0, by modified Lentz:
//   1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + 2 / (x + ...)))))
double erfc_scaled_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double C = x;
  double D = 0.0;
  for (int i = 1; i < 5000; ++i) {
    const double a = 0.5 * i;
    D = x + a * D;
    if (D == 0.0) D = tiny;
    C = x + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (f * std::sqrt(kPi));
}

constexpr double kSeriesLimit = 2.5;

}  // namespace

double page_entropy(std::uint64_t dA, std::uint64_t dB) {
  if (dA < 1 || dA > dB) throw DomainError("page_entropy needs 1 <= dA <= dB");
  // Kahan summation from the smallest terms up.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = dA * dB; k > dB; --k) {
    const double y = 1.0 / static_cast<double>(k) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum - static_cast<double>(dA - 1) / (2.0 * static_cast<double>(dB));
}

PageAsymptotic page_asymptotic(std::uint64_t dA, std::uint64_t dB) {
  if (dA < 1 || dA > dB) throw DomainError("page_asymptotic needs 1 <= dA <= dB");
  const double a = static_cast<double>(dA);
  const double b = static_cast<double>(dB);
  return {std::log(a) - a / (2.0 * b), dA * dB >= 4};
}

double universal_correction(double f) {
  check_fraction(f);
  const double g = std::min(f, 1.0 - f);
  return -std::log(1.0 - g) / 2.0 + (g == 0.5 ? 2.0 / kPi : 0.0);
}

double universal_entropy(int n, double f) {
  check_fraction(f);
  const double g = std::min(f, 1.0 - f);
  const double m = g * n;
  if (std::abs(m - std::round(m)) > 1e-9) throw DomainError("f * n must be an integer");
  return std::round(m) * kLn2 - universal_correction(g);
}

double lemma_bound(int m, int n, double energy) {
  if (m % 2 != 0) throw DomainError("lemma bound requires an even subsystem size");
  if (m < 0 || 2 * m > n) throw DomainError("lemma bound requires 0 <= m <= n/2");
  const double f = static_cast<double>(m) / n;
  return m * kLn2 - f * energy * energy / (4.0 * n);
}

double theorem_bound(int m, int n, double moment, double norm) {
  if (norm == 0.0) throw DomainError("local term norm must be nonzero");
  if (m < 0 || 2 * m > n) throw DomainError("theorem bound requires 0 <= m <= n/2");
  const double f = static_cast<double>(m) / n;
  return m * kLn2 - f * moment / (4.0 * norm * norm);
}

BoundReport make_bound_report(std::string name, double bound, double measured) {
  const double slack = bound - measured;
  return {std::move(name), bound, measured, slack, slack >= -kBoundSlackTolerance};
}

double appendix_a_candidates(double eps) {
  if (!(std::abs(eps) <= 1.0)) throw DomainError("local energy must satisfy |eps| <= 1");
  double best = shannon({0.25 + eps / 4, 0.25 + eps / 4, 0.25 - eps / 4, 0.25 - eps / 4});
  if (eps >= -0.5) {
    const double q = 0.25 - eps / 6;
    best = std::max(best, shannon({0.25 + eps / 2, q, q, q}));
  }
  if (eps <= 0.5) {
    const double q = 0.25 + eps / 6;
    best = std::max(best, shannon({0.25 - eps / 2, q, q, q}));
  }
  return best;
}

double two_site_bound(double eps) { return 2.0 * kLn2 - eps * eps / 2.0; }

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < kSeriesLimit) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;
  return std::exp(-x * x) * erfc_scaled_fraction(x);
}

double erfc_scaled(double x) {
  if (x < 0.0) throw DomainError("erfc_scaled is defined here for x >= 0");
  if (x < kSeriesLimit) return std::exp(x * x) * (1.0 - erf_series(x));
  return erfc_scaled_fraction(x);
}

AsymptoticParams make_asymptotic_params(int n, int m, int j, int k) {
  if (n < 1 || m < 1 || m >= n) throw DomainError("asymptotic parameters need 0 < m < n");
  AsymptoticParams p;
  p.n = n;
  p.m = m;
  p.f = static_cast<double>(m) / n;
  p.j = j;
  p.k = k;
  const double root = std::sqrt(static_cast<double>(n));
  p.J = j / root - root / 2.0;
  p.K = k / root - p.f * root / 2.0;
  return p;
}

double sector_entropy_flt_half(int n, double f, double J) {
  if (!(f > 0.0 && f < 0.5)) throw DomainError("f must lie in (0, 1/2); use sector_entropy_half at f = 1/2");
  return f * n * kLn2 + f * (1.0 - 4.0 * J * J) / 2.0 + std::log(1.0 - f) / 2.0;
}

double sector_entropy_half(int n, double J) {
  J = -std::abs(J);
  return (n - 1) / 2.0 * kLn2 + 0.25 + J * std::sqrt(2.0 / kPi) - J * J -
         erfc_scaled(-std::sqrt(2.0) * J) / 2.0;
}

QuadratureResult gaussian_moment_integral(double abs_tol) {
  return integrate_adaptive([](double J) { return std::exp(-2.0 * J * J) * (1.0 - 4.0 * J * J); }, -8.0,
                            8.0, abs_tol);
}

double half_filling_integrand(double J) {
  // e^{-2J^2} e^{2J^2} erfc(-sqrt2 J) folded into a plain erfc
  return std::exp(-2.0 * J * J) * (0.25 + J * std::sqrt(2.0 / kPi) - J * J) - erfc(-std::sqrt(2.0) * J) / 2.0;
}

QuadratureResult half_filling_sector_integral(double abs_tol) {
  const double weight = std::sqrt(8.0 / kPi);
  QuadratureResult q = integrate_adaptive(half_filling_integrand, -8.0, 0.0, abs_tol / weight);
  q.value *= weight;
  q.error_estimate *= weight;
  return q;
}

SectorAverage average_over_sectors(double f, double abs_tol) {
  if (!(f > 0.0 && f <= 0.5)) throw DomainError("average_over_sectors needs 0 < f <= 1/2");
  if (f == 0.5) {
    const QuadratureResult q = half_filling_sector_integral(abs_tol);
    // (n-1)/2 ln 2 + I relative to (n/2) ln 2
    return {-kLn2 / 2.0 + q.value, q.error_estimate};
  }
  const QuadratureResult q = gaussian_moment_integral(abs_tol);
  // weight |M_j| / 2^n dj -> sqrt(2/pi) e^{-2J^2} dJ acting on f (1 - 4J^2) / 2
  return {std::log(1.0 - f) / 2.0 + f / std::sqrt(2.0 * kPi) * q.value, f / std::sqrt(2.0 * kPi) * q.error_estimate};
}

}  // namespace eigenent
