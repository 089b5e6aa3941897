#include "eigenent/random_states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "eigenent/entanglement.hpp"
#include "eigenent/errors.hpp"
#include "eigenent/parallel.hpp"
#include "eigenent/spin_basis.hpp"

namespace eigenent {

namespace {

// Splits sector (n, j) by the number k of up spins among the m low bits.
// Member i of the sector lands in block k at (row, col) of the
// |L_k| x |R_{j-k}| coefficient matrix, both ranks taken in ascending order.
struct SectorSplit {
  int k_min = 0;
  int k_max = 0;
  std::vector<std::uint64_t> rows;  // per block
  std::vector<std::uint64_t> cols;
  std::vector<int> block_of;        // per sector member
  std::vector<std::uint64_t> offset_of;

  SectorSplit(int n, int m, int j) {
    k_min = std::max(0, m - n + j);
    k_max = std::min(m, j);
    for (int k = k_min; k <= k_max; ++k) {
      rows.push_back(binomial(m, k));
      cols.push_back(binomial(n - m, j - k));
    }
    std::vector<std::uint64_t> rank_a(std::size_t{1} << m);
    std::vector<std::uint64_t> rank_b(std::size_t{1} << (n - m));
    std::vector<std::uint64_t> seen_a(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::uint64_t> seen_b(static_cast<std::size_t>(n - m) + 1, 0);
    for (std::uint64_t a = 0; a < rank_a.size(); ++a) rank_a[a] = seen_a[static_cast<std::size_t>(std::popcount(a))]++;
    for (std::uint64_t b = 0; b < rank_b.size(); ++b) rank_b[b] = seen_b[static_cast<std::size_t>(std::popcount(b))]++;

    const std::uint64_t a_mask = (std::uint64_t{1} << m) - 1;
    for (const BasisState& s : enumerate_sector(n, j).states) {
      const std::uint64_t a = s.mask & a_mask;
      const std::uint64_t b = s.mask >> m;
      const int block = std::popcount(a) - k_min;
      block_of.push_back(block);
      offset_of.push_back(rank_a[a] + rows[static_cast<std::size_t>(block)] * rank_b[b]);
    }
  }

  std::size_t blocks() const { return rows.size(); }
};

std::vector<BlockPopulation> split_blocks(const SectorSplit& split, const Eigen::VectorXcd& local) {
  std::vector<Eigen::VectorXcd> coeffs(split.blocks());
  for (std::size_t b = 0; b < split.blocks(); ++b) {
    coeffs[b] = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(split.rows[b] * split.cols[b]));
  }
  for (std::size_t i = 0; i < split.block_of.size(); ++i) {
    coeffs[static_cast<std::size_t>(split.block_of[i])](static_cast<Eigen::Index>(split.offset_of[i])) =
        local(static_cast<Eigen::Index>(i));
  }
  std::vector<BlockPopulation> out;
  for (std::size_t b = 0; b < split.blocks(); ++b) {
    BlockPopulation p;
    p.k = split.k_min + static_cast<int>(b);
    p.rows = split.rows[b];
    p.cols = split.cols[b];
    p.weight = coeffs[b].squaredNorm();
    if (p.weight > 0.0) {
      const Eigen::VectorXcd normalized = coeffs[b] / std::sqrt(p.weight);
      p.entropy = von_neumann_entropy(schmidt_spectrum(normalized, static_cast<Eigen::Index>(p.rows),
                                                       static_cast<Eigen::Index>(p.cols)));
    }
    out.push_back(p);
  }
  // Renormalize so rounding in |psi| cannot leak into -w ln w.
  double total = 0.0;
  for (const auto& p : out) total += p.weight;
  if (total > 0.0) {
    for (auto& p : out) p.weight /= total;
  }
  return out;
}

void check_sector(int n, int j) {
  if (n < 1 || n > 30) throw DomainError("site count out of range");
  if (j < 0 || j > n) throw DomainError("up-spin count outside [0, n]");
}

}  // namespace

MonteCarloEstimate summarize(std::span<const double> values) {
  MonteCarloEstimate e;
  e.samples = values.size();
  if (values.empty()) return e;
  e.mean = pairwise_sum(values.begin(), values.end()) / static_cast<double>(values.size());
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    std::transform(values.begin(), values.end(), sq.begin(),
                   [&](double v) { return (v - e.mean) * (v - e.mean); });
    e.std_dev = std::sqrt(pairwise_sum(sq.begin(), sq.end()) / static_cast<double>(values.size() - 1));
    e.std_error = e.std_dev / std::sqrt(static_cast<double>(values.size()));
  }
  return e;
}

Eigen::VectorXcd haar_state(std::size_t d, SeededSampler& sampler) {
  if (d == 0) throw DomainError("Haar state needs dimension >= 1");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = sampler.complex_gaussian();
  return v / v.norm();
}

std::vector<double> page_samples(std::uint64_t dA, std::uint64_t dB, std::size_t trials,
                                 SeededSampler& sampler, int threads) {
  if (trials < 1) throw DomainError("page_average needs at least one trial");
  if (dA < 1 || dB < 1) throw DomainError("dimensions must be positive");
  const std::uint64_t base = sampler.next_u64();
  std::vector<double> s(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    SeededSampler local = SeededSampler::derive(base, {t});
    const Eigen::VectorXcd v = haar_state(dA * dB, local);
    s[t] = von_neumann_entropy(
        schmidt_spectrum(v, static_cast<Eigen::Index>(dA), static_cast<Eigen::Index>(dB)));
  });
  return s;
}

MonteCarloEstimate page_average(std::uint64_t dA, std::uint64_t dB, std::size_t trials,
                                SeededSampler& sampler, Orientation orientation, int threads) {
  if (dA > dB) {
    if (orientation == Orientation::Reject) throw DomainError("page_average needs dA <= dB");
    std::swap(dA, dB);
  }
  const std::vector<double> s = page_samples(dA, dB, trials, sampler, threads);
  return summarize(s);
}

SectorRandomState sector_random_state(int n, int j, SeededSampler& sampler) {
  check_sector(n, j);
  const MagnetizationSector sector = enumerate_sector(n, j);
  const Eigen::VectorXcd local = haar_state(sector.size(), sampler);
  SectorRandomState out{n, j, PureState::zero(n)};
  for (std::size_t i = 0; i < sector.size(); ++i) {
    out.state.amplitudes(static_cast<Eigen::Index>(sector.states[i].mask)) = local(static_cast<Eigen::Index>(i));
  }
  return out;
}

std::vector<BlockPopulation> block_populations(const SectorRandomState& s, int m) {
  if (m < 1 || m > s.n - 1) throw DomainError("subsystem size outside [1, n-1]");
  const SectorSplit split(s.n, m, s.j);
  const MagnetizationSector sector = enumerate_sector(s.n, s.j);
  Eigen::VectorXcd local(static_cast<Eigen::Index>(sector.size()));
  for (std::size_t i = 0; i < sector.size(); ++i) {
    local(static_cast<Eigen::Index>(i)) = s.state.amplitudes(static_cast<Eigen::Index>(sector.states[i].mask));
  }
  return split_blocks(split, local);
}

double entropy_from_blocks(const std::vector<BlockPopulation>& blocks) {
  double s = 0.0;
  for (const auto& b : blocks) {
    if (b.weight > 0.0) s += b.weight * b.entropy - b.weight * std::log(b.weight);
  }
  return s;
}

double expected_block_weight(int n, int m, int j, int k) {
  return static_cast<double>(binomial(m, k)) * static_cast<double>(binomial(n - m, j - k)) /
         static_cast<double>(binomial(n, j));
}

ModelMEstimate model_m_average(int n, int m, std::size_t samples_per_sector, std::uint64_t seed,
                               int threads) {
  if (samples_per_sector < 1) throw DomainError("need at least one sample per sector");
  if (n < 2 || n > 24) throw DomainError("model M supports 2 <= n <= 24");
  if (m < 1 || m > n - 1) throw DomainError("subsystem size outside [1, n-1]");

  ModelMEstimate out;
  out.n = n;
  out.m = m;
  std::vector<SectorSplit> splits;
  for (int j = 0; j <= n; ++j) splits.emplace_back(n, m, j);

  // Flattened (sector, sample) tasks so small sectors do not serialize work.
  const std::size_t tasks = static_cast<std::size_t>(n + 1) * samples_per_sector;
  std::vector<double> entropies(tasks);
  parallel_for(tasks, threads, [&](std::size_t t) {
    const auto j = static_cast<int>(t / samples_per_sector);
    const std::size_t i = t % samples_per_sector;
    const SectorSplit& split = splits[static_cast<std::size_t>(j)];
    SeededSampler sampler = SeededSampler::derive(seed, {static_cast<std::uint64_t>(j), i});
    const Eigen::VectorXcd local = haar_state(split.block_of.size(), sampler);
    entropies[t] = entropy_from_blocks(split_blocks(split, local));
  });

  const double total = std::ldexp(1.0, n);
  std::vector<double> weighted(static_cast<std::size_t>(n + 1));
  double variance = 0.0;
  for (int j = 0; j <= n; ++j) {
    SectorEstimate se;
    se.j = j;
    se.dim = binomial(n, j);
    se.entropy = summarize(std::span<const double>(entropies).subspan(
        static_cast<std::size_t>(j) * samples_per_sector, samples_per_sector));
    const double w = static_cast<double>(se.dim) / total;
    weighted[static_cast<std::size_t>(j)] = w * se.entropy.mean;
    variance += w * w * se.entropy.std_error * se.entropy.std_error;
    out.sectors.push_back(se);
  }
  out.mean = pairwise_sum(weighted.begin(), weighted.end());
  out.std_error = std::sqrt(variance);
  return out;
}

void write_sector_table_csv(std::ostream& out, const ModelMEstimate& estimate) {
  out << "j,dim,samples,mean_S,std_error\n" << std::setprecision(17);
  for (const auto& s : estimate.sectors) {
    out << s.j << ',' << s.dim << ',' << s.entropy.samples << ',' << s.entropy.mean << ','
        << s.entropy.std_error << '\n';
  }
}

}  // namespace eigenent
