#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <numeric>
#include <random>

#include "eigenent/eigensolve.hpp"
#include "eigenent/errors.hpp"
#include "oracles.hpp"

using namespace eigenent;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("solve_hermitian on a random matrix") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> N;
  Eigen::MatrixXcd A(12, 12);
  for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = cplx(N(rng), N(rng));
  A = (A + A.adjoint()).eval();
  auto ed = solve_hermitian(A);
  CHECK((A * ed.vectors - ed.vectors * ed.values.asDiagonal()).norm() < 1e-10);
  CHECK((ed.vectors.adjoint() * ed.vectors - Eigen::MatrixXcd::Identity(12, 12)).norm() < 1e-12);
  for (Eigen::Index i = 1; i < ed.values.size(); ++i) CHECK(ed.values(i - 1) <= ed.values(i));

  A(0, 1) += 1e-3;
  CHECK_THROWS_AS(solve_hermitian(A), DomainError);
  CHECK_THROWS_AS(solve_hermitian(Eigen::MatrixXcd::Zero(2, 3)), DomainError);
}

TEST_CASE("dense spectrum of the two-site chain") {
  auto spec = diagonalize_dense(build_chaotic_ising(2, 0.0, 0.0));
  REQUIRE(spec.size() == 4);
  CHECK(spec.eigenvalue(0) == doctest::Approx(-2.0));
  CHECK(spec.eigenvalue(1) == doctest::Approx(-2.0));
  CHECK(spec.eigenvalue(2) == doctest::Approx(2.0));
  CHECK(spec.eigenvalue(3) == doctest::Approx(2.0));
  CHECK(spec.sector(0) == kFullSpace);
  CHECK(spec.degenerate_states() == 4);
  CHECK(spec.degeneracy_multiplicities() == std::vector<int>{2, 2});
}

TEST_CASE("diagonal Hamiltonians give product eigenvectors") {
  auto spec = diagonalize_dense(build_chaotic_ising(4, 0.0, 0.3));
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto v = spec.eigenvector(j);
    Eigen::Index idx;
    CHECK(v.amplitudes.cwiseAbs().maxCoeff(&idx) == 1.0);
    CHECK(v.amplitudes.norm() == 1.0);
  }
}

TEST_CASE("trace identities") {
  for (int n : {6, 8, 10}) {
    for (auto [g, h] : {std::pair{1.05, 0.5}, std::pair{0.905, 0.809}}) {
      auto spec = diagonalize_sectors(build_chaotic_ising(n, g, h), {.keep_vectors = false});
      const auto& E = spec.eigenvalues();
      const double d = static_cast<double>(E.size());
      const double sum = std::accumulate(E.begin(), E.end(), 0.0);
      double sq = 0.0;
      for (double e : E) sq += e * e;
      CHECK(std::abs(sum) / d < 1e-10);
      const double expected = n * (1.0 + g * g + h * h);
      CHECK(std::abs(sq / d - expected) / expected < 1e-8);
    }
  }
}

TEST_CASE("momentum block dimensions") {
  auto lookup = build_orbit_lookup(4);
  auto H = build_chaotic_ising(4, 1.05, 0.5);
  auto blocks = build_momentum_blocks(H, lookup);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].matrix.rows() == 6);
  int total = 0;
  for (const auto& b : blocks) {
    total += static_cast<int>(b.matrix.rows());
    CHECK((b.matrix - b.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  }
  CHECK(total == 16);
  CHECK_THROWS_AS(build_momentum_block(H, lookup, 4), DomainError);
  CHECK_THROWS_AS(build_momentum_block(build_chaotic_ising(5, 1.0, 1.0), lookup, 0), DomainError);

  auto spec = diagonalize_sectors(H);
  CHECK(spec.block_dimensions() == std::vector<int>{6, 3, 4, 3});
}

TEST_CASE("sector and dense spectra agree") {
  for (int n : {3, 5, 8}) {
    auto H = build_chaotic_ising(n, 1.05, 0.5);
    auto dense = diagonalize_dense(H);
    auto sectors = diagonalize_sectors(H);
    CHECK(max_abs_diff(dense.eigenvalues(), sectors.eigenvalues()) < 1e-8);

    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::ising(n, 1.05, 0.5));
    std::vector<double> ref(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    CHECK(max_abs_diff(ref, sectors.eigenvalues()) < 1e-8);
  }
}

TEST_CASE("sector eigenvectors") {
  const int n = 8;
  auto H = build_chaotic_ising(n, 0.905, 0.809);
  auto spec = diagonalize_sectors(H);
  const auto M = dense_matrix(H);
  const auto T = oracle::translation(n);
  const auto V = spec.eigenvector_matrix();
  const auto dim = static_cast<Eigen::Index>(spec.size());

  CHECK((V.adjoint() * V - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto& v = V.col(static_cast<Eigen::Index>(j));
    CHECK((M * v - spec.eigenvalue(j) * v).norm() < 1e-9);
    // T v = e^{2 pi i k / n} v with T moving spin i to i+1
    const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * spec.sector(j) / n);
    CHECK((T * v - phase * v).norm() < 1e-8);
  }

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = oracle::random_state(dim, rng);
    CHECK(((V * (V.adjoint() * psi)) - psi).norm() < 1e-10);
  }
}

TEST_CASE("eigenvalue-only solves") {
  auto spec = diagonalize_sectors(build_chaotic_ising(6, 1.05, 0.5), {.keep_vectors = false});
  CHECK_FALSE(spec.has_eigenvectors());
  CHECK_THROWS_AS(spec.eigenvector(0), DomainError);
}

TEST_CASE("size caps and symmetry requirements") {
  CHECK_THROWS_AS(diagonalize_dense(build_chaotic_ising(13, 1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(diagonalize_dense(build_chaotic_ising(6, 1.0, 1.0), {.dense_cap = 5}), DomainError);
  CHECK_THROWS_AS(diagonalize_sectors(build_chaotic_ising(6, 1.0, 1.0), {.sector_cap = 5}), DomainError);
  CHECK_THROWS_AS(diagonalize_sectors(build_disordered(6, 1.0, 0.5, 0.2, 1)), DomainError);
  CHECK_NOTHROW(diagonalize_dense(build_disordered(6, 1.0, 0.5, 0.2, 1)));
}

TEST_CASE("thread count does not change results") {
  auto H = build_chaotic_ising(8, 1.05, 0.5);
  auto a = diagonalize_sectors(H, {.threads = 1});
  auto b = diagonalize_sectors(H, {.threads = 3});
  CHECK(a.eigenvalues() == b.eigenvalues());
  CHECK(a.eigenvector(17).amplitudes == b.eigenvector(17).amplitudes);
}

TEST_CASE("degeneracy bookkeeping") {
  auto spec = diagonalize_sectors(build_chaotic_ising(10, 1.05, 0.5), {.keep_vectors = false});
  std::size_t sum = 0;
  for (int m : spec.degeneracy_multiplicities()) {
    CHECK(m >= 2);
    sum += static_cast<std::size_t>(m);
  }
  CHECK(sum == spec.degenerate_states());
}

TEST_CASE("spectrum cache round trip") {
  auto spec = diagonalize_sectors(build_chaotic_ising(6, 1.05, 0.5), {.keep_vectors = false});
  SpectrumCacheKey key{"chaotic_ising", 6, 1.05, 0.5, 0};
  const auto name = spectrum_cache_filename(key);
  CHECK(name.find("chaotic_ising_n6") == 0);
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  write_spectrum_cache(path, key, spec);
  auto entry = read_spectrum_cache(path);
  CHECK(entry.key == key);
  CHECK(entry.eigenvalues == spec.eigenvalues());
  CHECK_FALSE(entry.eigenvectors_persisted);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_spectrum_cache(path), BackendError);
}
