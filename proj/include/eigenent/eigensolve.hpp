#pragma once

// Full spectral decomposition of chain Hamiltonians, either on the whole
// 2^n space or block by block in translation (momentum) sectors.

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eigenent/model_hamiltonians.hpp"
#include "eigenent/pure_state.hpp"
#include "eigenent/spin_basis.hpp"

namespace eigenent {

// Narrow interface to the dense Hermitian eigensolver.
struct EigenDecomposition {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // orthonormal columns
};

EigenDecomposition solve_hermitian(const Eigen::MatrixXcd& A);

// Momentum-k block in the basis |r,k> = p_r^{-1/2} sum_{t<p_r} e^{-2 pi i k t/n} T^t |r>.
struct MomentumBlock {
  int k = 0;
  std::vector<std::uint32_t> orbits;  // indices into OrbitLookup::orbits
  std::vector<double> norms;          // sqrt(period) of each orbit
  Eigen::MatrixXcd matrix;
};

MomentumBlock build_momentum_block(const ChainHamiltonian& H, const OrbitLookup& lookup, int k);
std::vector<MomentumBlock> build_momentum_blocks(const ChainHamiltonian& H, const OrbitLookup& lookup);

// Label used for states from an unsymmetrized diagonalization.
inline constexpr int kFullSpace = -1;

struct SolveOptions {
  int dense_cap = 12;
  int sector_cap = 16;
  int threads = 1;
  bool keep_vectors = true;
};

class Spectrum {
 public:
  int sites() const noexcept { return n_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double eigenvalue(std::size_t j) const { return eigenvalues_.at(j); }
  // Momentum k of state j, or kFullSpace.
  int sector(std::size_t j) const { return blocks_[location_.at(j).block].k; }
  bool has_eigenvectors() const noexcept { return has_vectors_; }

  PureState eigenvector(std::size_t j) const;
  // All eigenvectors as columns of a 2^n x 2^n matrix.
  Eigen::MatrixXcd eigenvector_matrix() const;

  // States whose eigenvalue coincides (within tolerance) with another state
  // of the same block; their basis is whatever the backend returned.
  std::size_t degenerate_states() const noexcept { return degenerate_states_; }
  // Sizes of such clusters, concatenated over blocks in (k, index) order.
  const std::vector<int>& degeneracy_multiplicities() const noexcept { return multiplicities_; }

  std::vector<int> block_dimensions() const;

 private:
  friend Spectrum diagonalize_dense(const ChainHamiltonian&, const SolveOptions&);
  friend Spectrum diagonalize_sectors(const ChainHamiltonian&, const SolveOptions&);

  struct Block {
    int k = kFullSpace;
    std::vector<std::int32_t> row_of_orbit;  // -1 if the orbit is absent
    std::vector<double> norms;
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;
  };
  struct Location {
    std::uint32_t block;
    std::uint32_t column;
  };

  void finalize(double degeneracy_tol);

  int n_ = 0;
  bool has_vectors_ = false;
  std::shared_ptr<const OrbitLookup> lookup_;
  std::vector<Block> blocks_;
  std::vector<Location> location_;
  std::vector<double> eigenvalues_;
  std::size_t degenerate_states_ = 0;
  std::vector<int> multiplicities_;
};

Spectrum diagonalize_dense(const ChainHamiltonian& H, const SolveOptions& options = {});
Spectrum diagonalize_sectors(const ChainHamiltonian& H, const SolveOptions& options = {});

// Optional on-disk record of a spectrum's eigenvalues (JSON).
struct SpectrumCacheKey {
  std::string model;
  int n = 0;
  double g = 0.0;
  double h = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const SpectrumCacheKey&, const SpectrumCacheKey&) = default;
};

struct SpectrumCacheEntry {
  SpectrumCacheKey key;
  std::vector<double> eigenvalues;
  bool eigenvectors_persisted = false;
};

std::string spectrum_cache_filename(const SpectrumCacheKey& key);
void write_spectrum_cache(const std::string& path, const SpectrumCacheKey& key, const Spectrum& spectrum);
SpectrumCacheEntry read_spectrum_cache(const std::string& path);

}  // namespace eigenent
