#include "eigenent/model_hamiltonians.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "eigenent/errors.hpp"
#include "eigenent/sampler.hpp"

namespace eigenent {

namespace {

constexpr cplx kI{0.0, 1.0};

// Acts with a single Pauli on bit `pos`, updating mask and amplitude in place.
void act(Pauli p, int pos, std::uint64_t& mask, cplx& amp) {
  const bool up = (mask >> pos) & 1U;
  switch (p) {
    case Pauli::X:
      mask ^= std::uint64_t{1} << pos;
      break;
    case Pauli::Y:
      mask ^= std::uint64_t{1} << pos;
      amp *= up ? kI : -kI;
      break;
    case Pauli::Z:
      if (!up) amp = -amp;
      break;
  }
}

void check_site(const ChainHamiltonian& H, int site) {
  if (site < 1 || site > H.n) {
    throw DomainError("site " + std::to_string(site) + " outside [1, " + std::to_string(H.n) + "]");
  }
}

void require_translation_invariant(const ChainHamiltonian& H) {
  if (!H.translation_invariant) {
    throw DomainError("Hamiltonian is not translation invariant; use the per-site variant");
  }
}

// Acts with term `t` placed on bit positions (lo, hi) and accumulates into out.
template <class Sink>
void apply_term(const LocalTermSpec& t, int lo, int hi, std::uint64_t mask, Sink&& sink) {
  for (int a = 0; a < 3; ++a) {
    if (t.field[a] != 0.0) {
      std::uint64_t m = mask;
      cplx amp = t.field[a];
      act(static_cast<Pauli>(a), lo, m, amp);
      sink(m, amp);
    }
    for (int b = 0; b < 3; ++b) {
      if (t.coupling[a][b] == 0.0) continue;
      std::uint64_t m = mask;
      cplx amp = t.coupling[a][b];
      act(static_cast<Pauli>(b), hi, m, amp);
      act(static_cast<Pauli>(a), lo, m, amp);
      sink(m, amp);
    }
  }
}

}  // namespace

LocalTermSpec LocalTermSpec::scaled(double factor) const {
  LocalTermSpec out = *this;
  for (auto& c : out.field) c *= factor;
  for (auto& row : out.coupling)
    for (auto& c : row) c *= factor;
  return out;
}

ChainHamiltonian ChainHamiltonian::scaled(double factor) const {
  ChainHamiltonian out = *this;
  for (auto& t : out.terms) t = t.scaled(factor);
  return out;
}

ChainHamiltonian build_chaotic_ising(int n, double g, double h) {
  if (n < 2) throw DomainError("chain needs at least 2 sites, got " + std::to_string(n));
  LocalTermSpec term;
  term.coupling[2][2] = 1.0;
  term.field[0] = g;
  term.field[2] = h;
  return ChainHamiltonian{n, std::vector<LocalTermSpec>(static_cast<std::size_t>(n), term), true};
}

ChainHamiltonian build_disordered(int n, double g, double h_center, double w, std::uint64_t seed) {
  if (!(w >= 0.0)) throw DomainError("disorder width must be non-negative");
  ChainHamiltonian H = build_chaotic_ising(n, g, h_center);
  if (w == 0.0) return H;
  SeededSampler sampler(seed);
  for (auto& t : H.terms) t.field[2] = sampler.uniform(h_center - w, h_center + w);
  H.translation_invariant = false;
  return H;
}

std::vector<MatrixElement> apply_to_basis_state(const ChainHamiltonian& H, std::uint64_t mask) {
  std::vector<MatrixElement> out;
  cplx diagonal = 0.0;
  for (int i = 0; i < H.n; ++i) {
    apply_term(H.terms[static_cast<std::size_t>(i)], i, (i + 1) % H.n, mask,
               [&](std::uint64_t m, cplx amp) {
                 if (m == mask) {
                   diagonal += amp;
                 } else {
                   out.push_back({m, amp});
                 }
               });
  }
  if (diagonal != 0.0) out.push_back({mask, diagonal});
  return out;
}

PureState apply_to_state(const ChainHamiltonian& H, const PureState& v) {
  if (v.n != H.n || v.dim() != hilbert_dim(H.n)) {
    throw DomainError("state has " + std::to_string(v.n) + " sites, Hamiltonian has " +
                      std::to_string(H.n));
  }
  PureState out = PureState::zero(H.n);
  const auto dim = static_cast<std::uint64_t>(v.dim());
  for (std::uint64_t s = 0; s < dim; ++s) {
    const cplx c = v.amplitudes(static_cast<Eigen::Index>(s));
    if (c == 0.0) continue;
    for (int i = 0; i < H.n; ++i) {
      apply_term(H.terms[static_cast<std::size_t>(i)], i, (i + 1) % H.n, s,
                 [&](std::uint64_t m, cplx amp) {
                   out.amplitudes(static_cast<Eigen::Index>(m)) += amp * c;
                 });
    }
  }
  return out;
}

Eigen::MatrixXcd dense_matrix(const ChainHamiltonian& H) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(H.n));
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    for (const auto& e : apply_to_basis_state(H, static_cast<std::uint64_t>(s))) {
      M(static_cast<Eigen::Index>(e.mask), s) += e.value;
    }
  }
  return M;
}

Eigen::Matrix4cd local_term_matrix(const ChainHamiltonian& H, int site) {
  check_site(H, site);
  const LocalTermSpec& t = H.terms[static_cast<std::size_t>(site - 1)];
  Eigen::Matrix4cd M = Eigen::Matrix4cd::Zero();
  for (std::uint64_t s = 0; s < 4; ++s) {
    apply_term(t, 0, 1, s, [&](std::uint64_t m, cplx amp) {
      M(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(s)) += amp;
    });
  }
  return M;
}

double infinite_temperature_moment_at(const ChainHamiltonian& H, int site) {
  const Eigen::Matrix4cd M = local_term_matrix(H, site);
  return (M * M).trace().real() / 4.0;
}

double infinite_temperature_moment(const ChainHamiltonian& H) {
  require_translation_invariant(H);
  return infinite_temperature_moment_at(H, 1);
}

double local_term_norm_at(const ChainHamiltonian& H, int site) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(local_term_matrix(H, site),
                                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double local_term_norm(const ChainHamiltonian& H) {
  require_translation_invariant(H);
  return local_term_norm_at(H, 1);
}

}  // namespace eigenent
