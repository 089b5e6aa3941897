#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

namespace eigenent {

using cplx = std::complex<double>;

// Amplitudes over the 2^n computational basis, indexed by BasisState::mask.
struct PureState {
  int n = 0;
  Eigen::VectorXcd amplitudes;

  PureState() = default;
  PureState(int sites, Eigen::VectorXcd amps);

  static PureState zero(int sites);
  static PureState basis(int sites, std::uint64_t mask);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

inline std::size_t hilbert_dim(int n) { return std::size_t{1} << n; }

}  // namespace eigenent
