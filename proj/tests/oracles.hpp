#pragma once
// Reference implementations used only by the tests. They share no code with
// the library: operators come from explicit Kronecker products, reduced
// states from an explicit partial trace.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Single-site Paulis on (|0> = down, |1> = up).
inline Mat pauli(int a) {
  Mat P = Mat::Zero(2, 2);
  const cplx I(0.0, 1.0);
  switch (a) {
    case 0:
      P(0, 1) = 1.0;
      P(1, 0) = 1.0;
      break;
    case 1:
      P(0, 1) = I;
      P(1, 0) = -I;
      break;
    default:
      P(0, 0) = -1.0;
      P(1, 1) = 1.0;
  }
  return P;
}

inline Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

// Operator on the 2^n space acting as `op` on `site` (1-based). Site 1 is the
// least significant tensor factor.
inline Mat embed(const Mat& op, int site, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int s = n; s >= 1; --s) out = kron(out, s == site ? op : Mat::Identity(2, 2));
  return out;
}

inline Mat two_site(int a, int site_a, int b, int site_b, int n) {
  return embed(pauli(a), site_a, n) * embed(pauli(b), site_b, n);
}

// sum_i [c . s_i + sum_ab J_ab s^a_i s^b_{i+1}], periodic.
inline Mat chain(int n, const std::vector<std::array<double, 3>>& fields,
                 const std::vector<std::array<std::array<double, 3>, 3>>& couplings) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat H = Mat::Zero(d, d);
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    for (int a = 0; a < 3; ++a) {
      const double c = fields[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a)];
      if (c != 0.0) H += c * embed(pauli(a), i, n);
      for (int b = 0; b < 3; ++b) {
        const double J = couplings[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a)]
                                  [static_cast<std::size_t>(b)];
        if (J != 0.0) H += J * two_site(a, i, b, next, n);
      }
    }
  }
  return H;
}

// Z Z + g X + h Z per bond
inline Mat ising(int n, double g, double h) {
  std::vector<std::array<double, 3>> f(static_cast<std::size_t>(n), {g, 0.0, h});
  std::array<std::array<double, 3>, 3> J{};
  J[2][2] = 1.0;
  return chain(n, f, std::vector<std::array<std::array<double, 3>, 3>>(static_cast<std::size_t>(n), J));
}

inline Mat translation(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat T = Mat::Zero(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    const std::uint64_t t = ((u << 1) | (u >> (n - 1))) & ((std::uint64_t{1} << n) - 1);
    T(static_cast<Eigen::Index>(t), s) = 1.0;
  }
  return T;
}

// rho_A for A = low m qubits, built entry by entry.
inline Mat partial_trace(const Eigen::VectorXcd& psi, int m, int n) {
  const Eigen::Index dA = Eigen::Index{1} << m;
  const Eigen::Index dB = Eigen::Index{1} << (n - m);
  Mat rho = Mat::Zero(dA, dA);
  for (Eigen::Index a = 0; a < dA; ++a)
    for (Eigen::Index ap = 0; ap < dA; ++ap) {
      cplx acc = 0.0;
      for (Eigen::Index b = 0; b < dB; ++b) acc += psi(a + dA * b) * std::conj(psi(ap + dA * b));
      rho(a, ap) = acc;
    }
  return rho;
}

inline double entropy_of_density_matrix(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

inline Eigen::VectorXcd random_state(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cplx(N(rng), N(rng));
  return v / v.norm();
}

inline std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> C(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    C[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j)
      C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return C[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Number of binary necklaces of length n.
inline std::uint64_t burnside_orbits(int n) {
  std::uint64_t total = 0;
  for (int t = 0; t < n; ++t) total += std::uint64_t{1} << std::gcd(t, n);
  return total / static_cast<std::uint64_t>(n);
}

// Maclaurin series summed in long double, fine for |x| <= 3.
inline long double erfc_series(long double x) {
  long double term = x, sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / k;
    sum += term / (2 * k + 1);
  }
  return 1.0L - 2.0L / std::sqrt(3.14159265358979323846264338327950288L) * sum;
}

template <class F>
double simpson(F f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Exact Page sum in long double, largest terms last.
inline long double page_sum(std::uint64_t dA, std::uint64_t dB) {
  long double s = 0.0L;
  for (std::uint64_t k = dA * dB; k > dB; --k) s += 1.0L / static_cast<long double>(k);
  return s - static_cast<long double>(dA - 1) / (2.0L * static_cast<long double>(dB));
}

}  // namespace oracle
