#pragma once

// Haar-random pure states, and the magnetization-sector model in which every
// sector j (states with j up spins) carries an independent Haar-random basis.

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "eigenent/pure_state.hpp"
#include "eigenent/sampler.hpp"

namespace eigenent {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double std_dev = 0.0;
  std::size_t samples = 0;
};

MonteCarloEstimate summarize(std::span<const double> values);

// d i.i.d. complex Gaussians, normalized.
Eigen::VectorXcd haar_state(std::size_t d, SeededSampler& sampler);

enum class Orientation { Swap, Reject };

// Monte Carlo mean of S(rho_A) over Haar states on C^dA (x) C^dB.
MonteCarloEstimate page_average(std::uint64_t dA, std::uint64_t dB, std::size_t trials,
                                SeededSampler& sampler, Orientation orientation = Orientation::Reject,
                                int threads = 1);

// Per-trial entropies behind page_average, in trial order.
std::vector<double> page_samples(std::uint64_t dA, std::uint64_t dB, std::size_t trials,
                                 SeededSampler& sampler, int threads = 1);

struct SectorRandomState {
  int n = 0;
  int j = 0;
  PureState state;  // zero outside the sector
};

SectorRandomState sector_random_state(int n, int j, SeededSampler& sampler);

// Block of rho_A with k up spins in A: weight |c_k|^2 and entropy S(sigma_k).
struct BlockPopulation {
  int k = 0;
  double weight = 0.0;
  double entropy = 0.0;
  std::uint64_t rows = 0;  // |L_k|
  std::uint64_t cols = 0;  // |R_{j-k}|
};

std::vector<BlockPopulation> block_populations(const SectorRandomState& s, int m);

// sum_k w_k S_k - w_k ln w_k
double entropy_from_blocks(const std::vector<BlockPopulation>& blocks);

// Mean weight of block k for a Haar state in sector j: |L_k| |R_{j-k}| / |M_j|.
double expected_block_weight(int n, int m, int j, int k);

struct SectorEstimate {
  int j = 0;
  std::uint64_t dim = 0;
  MonteCarloEstimate entropy;
};

struct ModelMEstimate {
  int n = 0;
  int m = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::vector<SectorEstimate> sectors;
};

// sum_j |M_j| S_j / 2^n with S_j estimated from samples_per_sector Haar
// states in each sector. Sample i of sector j uses substream (seed, j, i).
ModelMEstimate model_m_average(int n, int m, std::size_t samples_per_sector, std::uint64_t seed,
                               int threads = 1);

// Columns: j,dim,samples,mean_S,std_error
void write_sector_table_csv(std::ostream& out, const ModelMEstimate& estimate);

}  // namespace eigenent
