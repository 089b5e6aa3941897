#include "eigenent/eigensolve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <numeric>
#include <sstream>

#include "eigenent/errors.hpp"
#include "eigenent/parallel.hpp"

namespace eigenent {

namespace {

double hermiticity_defect(const Eigen::MatrixXcd& A) {
  return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

bool is_real(const Eigen::MatrixXcd& A) { return A.imag().cwiseAbs().maxCoeff() == 0.0; }

template <class Solver>
void check_solver(const Solver& solver) {
  if (solver.info() != Eigen::Success) {
    throw BackendError("Hermitian eigensolver did not converge");
  }
}

}  // namespace

EigenDecomposition solve_hermitian(const Eigen::MatrixXcd& A) {
  if (A.rows() != A.cols()) throw DomainError("eigensolver input is not square");
  if (A.size() == 0) return {};
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if (hermiticity_defect(A) > 1e-12 * scale) {
    throw DomainError("eigensolver input is not Hermitian");
  }
  EigenDecomposition out;
  if (is_real(A)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A.real());
    check_solver(solver);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A);
    check_solver(solver);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  return out;
}

MomentumBlock build_momentum_block(const ChainHamiltonian& H, const OrbitLookup& lookup, int k) {
  if (lookup.n != H.n) throw DomainError("orbit table built for a different chain length");
  if (k < 0 || k >= H.n) throw DomainError("momentum index out of range");
  const int n = H.n;
  MomentumBlock block;
  block.k = k;
  std::vector<std::int32_t> row_of(lookup.orbits.size(), -1);
  for (std::uint32_t o = 0; o < lookup.orbits.size(); ++o) {
    const int p = lookup.orbits[o].period;
    if ((k * p) % n != 0) continue;
    row_of[o] = static_cast<std::int32_t>(block.orbits.size());
    block.orbits.push_back(o);
    block.norms.push_back(std::sqrt(static_cast<double>(p)));
  }

  std::vector<cplx> phase(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    phase[static_cast<std::size_t>(t)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * t) / n);
  }

  // <r',k|H|r,k> = sqrt(p_r / p_r') sum_{s in H|r>, s = T^t r'} h_s e^{2 pi i k t / n}
  const auto dim = static_cast<Eigen::Index>(block.orbits.size());
  block.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto& rep = lookup.orbits[block.orbits[static_cast<std::size_t>(col)]];
    for (const auto& e : apply_to_basis_state(H, rep.representative.mask)) {
      const std::int32_t row = row_of[lookup.orbit_of[e.mask]];
      if (row < 0) continue;
      const int t = lookup.shift_of[e.mask];
      block.matrix(row, col) += e.value * phase[static_cast<std::size_t>(t)] *
                                block.norms[static_cast<std::size_t>(col)] /
                                block.norms[static_cast<std::size_t>(row)];
    }
  }
  return block;
}

std::vector<MomentumBlock> build_momentum_blocks(const ChainHamiltonian& H, const OrbitLookup& lookup) {
  std::vector<MomentumBlock> blocks;
  for (int k = 0; k < H.n; ++k) blocks.push_back(build_momentum_block(H, lookup, k));
  return blocks;
}

PureState Spectrum::eigenvector(std::size_t j) const {
  if (!has_vectors_) throw DomainError("spectrum was computed without eigenvectors");
  const Location loc = location_.at(j);
  const Block& b = blocks_[loc.block];
  const auto column = b.vectors.col(loc.column);
  if (b.k == kFullSpace) return PureState(n_, column);

  PureState v = PureState::zero(n_);
  std::vector<cplx> phase(static_cast<std::size_t>(n_));
  for (int t = 0; t < n_; ++t) {
    phase[static_cast<std::size_t>(t)] =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(b.k * t) / n_);
  }
  const auto dim = static_cast<std::uint64_t>(v.dim());
  for (std::uint64_t s = 0; s < dim; ++s) {
    const std::int32_t row = b.row_of_orbit[lookup_->orbit_of[s]];
    if (row < 0) continue;
    v.amplitudes(static_cast<Eigen::Index>(s)) =
        column(row) * phase[lookup_->shift_of[s]] / b.norms[static_cast<std::size_t>(row)];
  }
  return v;
}

Eigen::MatrixXcd Spectrum::eigenvector_matrix() const {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_));
  Eigen::MatrixXcd V(dim, static_cast<Eigen::Index>(size()));
  for (std::size_t j = 0; j < size(); ++j) V.col(static_cast<Eigen::Index>(j)) = eigenvector(j).amplitudes;
  return V;
}

std::vector<int> Spectrum::block_dimensions() const {
  std::vector<int> dims;
  for (const auto& b : blocks_) dims.push_back(static_cast<int>(b.values.size()));
  return dims;
}

void Spectrum::finalize(double degeneracy_tol) {
  location_.clear();
  multiplicities_.clear();
  degenerate_states_ = 0;
  for (std::uint32_t bi = 0; bi < blocks_.size(); ++bi) {
    const Eigen::VectorXd& vals = blocks_[bi].values;
    for (Eigen::Index c = 0; c < vals.size(); ++c) {
      location_.push_back({bi, static_cast<std::uint32_t>(c)});
    }
    // values are ascending inside a block
    Eigen::Index start = 0;
    for (Eigen::Index c = 1; c <= vals.size(); ++c) {
      if (c < vals.size() && vals(c) - vals(c - 1) <= degeneracy_tol) continue;
      const auto cluster = static_cast<int>(c - start);
      if (cluster > 1) {
        multiplicities_.push_back(cluster);
        degenerate_states_ += static_cast<std::size_t>(cluster);
      }
      start = c;
    }
  }
  auto value_of = [&](const Location& l) {
    return blocks_[l.block].values(static_cast<Eigen::Index>(l.column));
  };
  std::stable_sort(location_.begin(), location_.end(),
                   [&](const Location& a, const Location& b) { return value_of(a) < value_of(b); });
  eigenvalues_.resize(location_.size());
  std::transform(location_.begin(), location_.end(), eigenvalues_.begin(), value_of);
}

Spectrum diagonalize_dense(const ChainHamiltonian& H, const SolveOptions& options) {
  if (H.n > options.dense_cap) {
    throw DomainError("dense diagonalization refused: n = " + std::to_string(H.n) +
                      " exceeds the dense cap of " + std::to_string(options.dense_cap));
  }
  const Eigen::MatrixXcd M = dense_matrix(H);
  Spectrum spec;
  spec.n_ = H.n;
  spec.has_vectors_ = options.keep_vectors;
  Spectrum::Block block;

  Eigen::MatrixXcd offdiag = M;
  offdiag.diagonal().setZero();
  if (offdiag.cwiseAbs().maxCoeff() == 0.0) {
    // Purely diagonal: the z-product basis is the canonical eigenbasis.
    const auto dim = M.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return M(a, a).real() < M(b, b).real();
    });
    block.values.resize(dim);
    if (options.keep_vectors) block.vectors = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index s = order[static_cast<std::size_t>(c)];
      block.values(c) = M(s, s).real();
      if (options.keep_vectors) block.vectors(s, c) = 1.0;
    }
  } else {
    EigenDecomposition ed = solve_hermitian(M);
    block.values = std::move(ed.values);
    if (options.keep_vectors) block.vectors = std::move(ed.vectors);
  }
  spec.blocks_.push_back(std::move(block));
  spec.finalize(1e-9 * std::max(1.0, M.cwiseAbs().rowwise().sum().maxCoeff()));
  return spec;
}

Spectrum diagonalize_sectors(const ChainHamiltonian& H, const SolveOptions& options) {
  if (!H.translation_invariant) {
    throw DomainError("momentum sectors need a translation-invariant Hamiltonian; use diagonalize_dense");
  }
  if (H.n > options.sector_cap) {
    throw DomainError("sector diagonalization refused: n = " + std::to_string(H.n) +
                      " exceeds the sector cap of " + std::to_string(options.sector_cap));
  }
  auto lookup = std::make_shared<const OrbitLookup>(build_orbit_lookup(H.n));
  Spectrum spec;
  spec.n_ = H.n;
  spec.has_vectors_ = options.keep_vectors;
  spec.lookup_ = lookup;
  spec.blocks_.resize(static_cast<std::size_t>(H.n));

  parallel_for(static_cast<std::size_t>(H.n), options.threads, [&](std::size_t k) {
    MomentumBlock mb = build_momentum_block(H, *lookup, static_cast<int>(k));
    Spectrum::Block& b = spec.blocks_[k];
    b.k = mb.k;
    b.norms = mb.norms;
    b.row_of_orbit.assign(lookup->orbits.size(), -1);
    for (std::size_t r = 0; r < mb.orbits.size(); ++r) {
      b.row_of_orbit[mb.orbits[r]] = static_cast<std::int32_t>(r);
    }
    EigenDecomposition ed = solve_hermitian(mb.matrix);
    b.values = std::move(ed.values);
    if (options.keep_vectors) b.vectors = std::move(ed.vectors);
  });

  // ||H|| <= n ||H_1||
  const double bound = static_cast<double>(H.n) * local_term_norm(H);
  spec.finalize(1e-9 * std::max(1.0, bound));
  return spec;
}

std::string spectrum_cache_filename(const SpectrumCacheKey& key) {
  std::ostringstream os;
  os << key.model << "_n" << key.n << "_g" << std::setprecision(17) << key.g << "_h" << key.h
     << "_s" << key.seed << ".json";
  return os.str();
}

void write_spectrum_cache(const std::string& path, const SpectrumCacheKey& key, const Spectrum& spectrum) {
  nlohmann::json j;
  j["model"] = key.model;
  j["n"] = key.n;
  j["g"] = key.g;
  j["h"] = key.h;
  j["seed"] = key.seed;
  j["eigenvalues"] = spectrum.eigenvalues();
  j["eigenvectors_persisted"] = false;
  std::ofstream out(path);
  if (!out) throw BackendError("cannot write spectrum cache " + path);
  out << j.dump() << '\n';
}

SpectrumCacheEntry read_spectrum_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BackendError("cannot read spectrum cache " + path);
  const nlohmann::json j = nlohmann::json::parse(in);
  SpectrumCacheEntry e;
  e.key.model = j.at("model").get<std::string>();
  e.key.n = j.at("n").get<int>();
  e.key.g = j.at("g").get<double>();
  e.key.h = j.at("h").get<double>();
  e.key.seed = j.at("seed").get<std::uint64_t>();
  e.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  e.eigenvectors_persisted = j.at("eigenvectors_persisted").get<bool>();
  return e;
}

}  // namespace eigenent
