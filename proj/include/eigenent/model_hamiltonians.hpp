#pragma once

// Periodic spin-1/2 chains with one- and two-site Pauli terms:
//   H = sum_i H_i,  H_i = sum_a c_a s^a_i + sum_{a,b} J_ab s^a_i s^b_{i+1}
// with a, b in {x, y, z}. There is no identity component, so every H_i is
// traceless and distinct H_i are trace-orthogonal.

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "eigenent/pure_state.hpp"

namespace eigenent {

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

struct LocalTermSpec {
  std::array<double, 3> field{};                    // x, y, z on site i
  std::array<std::array<double, 3>, 3> coupling{};  // [a][b]: s^a_i s^b_{i+1}

  friend bool operator==(const LocalTermSpec&, const LocalTermSpec&) = default;

  LocalTermSpec scaled(double factor) const;
};

struct ChainHamiltonian {
  int n = 0;
  std::vector<LocalTermSpec> terms;  // terms[i] couples sites i+1 and (i+1) mod n + 1
  bool translation_invariant = false;

  friend bool operator==(const ChainHamiltonian&, const ChainHamiltonian&) = default;

  ChainHamiltonian scaled(double factor) const;
};

// One amplitude produced by acting with H on a basis state.
struct MatrixElement {
  std::uint64_t mask;
  cplx value;
};

ChainHamiltonian build_chaotic_ising(int n, double g, double h);

// As build_chaotic_ising, with h_i uniform in [h_center - w, h_center + w].
ChainHamiltonian build_disordered(int n, double g, double h_center, double w, std::uint64_t seed);

// H|mask> as a list of (mask', amplitude); diagonal contributions merged.
std::vector<MatrixElement> apply_to_basis_state(const ChainHamiltonian& H, std::uint64_t mask);

PureState apply_to_state(const ChainHamiltonian& H, const PureState& v);

Eigen::MatrixXcd dense_matrix(const ChainHamiltonian& H);

// 4x4 matrix of H_i on sites (i, i+1), 1-based i; row index b_i + 2 b_{i+1}.
Eigen::Matrix4cd local_term_matrix(const ChainHamiltonian& H, int site);

// 2^-2 tr(H_1^2). Requires translation invariance.
double infinite_temperature_moment(const ChainHamiltonian& H);
double infinite_temperature_moment_at(const ChainHamiltonian& H, int site);

// Spectral norm of H_1. Requires translation invariance.
double local_term_norm(const ChainHamiltonian& H);
double local_term_norm_at(const ChainHamiltonian& H, int site);

}  // namespace eigenent
