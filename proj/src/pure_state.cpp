#include "eigenent/pure_state.hpp"

#include <string>

#include "eigenent/errors.hpp"

namespace eigenent {

PureState::PureState(int sites, Eigen::VectorXcd amps) : n(sites), amplitudes(std::move(amps)) {
  if (sites < 0 || sites > 30 || static_cast<std::size_t>(amplitudes.size()) != hilbert_dim(sites)) {
    throw DomainError("state of dimension " + std::to_string(amplitudes.size()) +
                      " does not match 2^" + std::to_string(sites));
  }
}

PureState PureState::zero(int sites) {
  return PureState(sites, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(hilbert_dim(sites))));
}

PureState PureState::basis(int sites, std::uint64_t mask) {
  PureState s = zero(sites);
  s.amplitudes(static_cast<Eigen::Index>(mask)) = 1.0;
  return s;
}

}  // namespace eigenent
