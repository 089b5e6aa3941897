#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eigenent/entanglement.hpp"
#include "eigenent/errors.hpp"
#include "eigenent/random_states.hpp"
#include "eigenent/sampler.hpp"
#include "eigenent/theory.hpp"
#include "oracles.hpp"

using namespace eigenent;

TEST_CASE("sampler is reproducible") {
  SeededSampler a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  CHECK(a.position() == 100);
  CHECK(a.seed() == 42);

  auto d1 = SeededSampler::derive(42, {3, 7});
  auto d2 = SeededSampler::derive(42, {3, 7});
  auto d3 = SeededSampler::derive(42, {7, 3});
  const auto first = d1.next_u64();
  CHECK(first == d2.next_u64());
  CHECK(first != d3.next_u64());
}

TEST_CASE("uniform and Gaussian draws") {
  SeededSampler s(5);
  double sum = 0.0, sq = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double u = s.uniform();
    CHECK_UNARY(u >= 0.0 && u < 1.0);
    const double g = s.gaussian();
    sum += g;
    sq += g * g;
  }
  CHECK(std::abs(sum / N) < 0.01);
  CHECK(std::abs(sq / N - 1.0) < 0.02);
  const double v = s.uniform(-2.0, -1.0);
  CHECK_UNARY(v >= -2.0 && v < -1.0);
}

TEST_CASE("Haar states") {
  SeededSampler s(1);
  auto one = haar_state(1, s);
  CHECK(std::abs(std::abs(one(0)) - 1.0) < 1e-15);
  CHECK_THROWS_AS(haar_state(0, s), DomainError);

  SeededSampler a(9), b(9);
  CHECK(haar_state(16, a) == haar_state(16, b));

  // E|a_0|^2 = 1/d
  std::vector<double> w;
  SeededSampler t(10);
  for (int i = 0; i < 10000; ++i) w.push_back(std::norm(haar_state(16, t)(0)));
  auto est = summarize(w);
  CHECK(std::abs(est.mean - 1.0 / 16.0) < 3.0 * est.std_error);
}

TEST_CASE("summary statistics") {
  std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  auto e = summarize(v);
  CHECK(e.mean == 2.5);
  CHECK(e.std_dev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(summarize(std::vector<double>{}).samples == 0);
  CHECK(summarize(std::vector<double>{7.0}).std_error == 0.0);
}

TEST_CASE("Page Monte Carlo") {
  SeededSampler s(3);
  auto trivial = page_samples(1, 8, 50, s);
  for (double x : trivial) CHECK(x == 0.0);

  auto qubits = page_average(2, 2, 4000, s);
  CHECK(std::abs(qubits.mean - 1.0 / 3.0) < 4.0 * qubits.std_error);

  auto big = page_average(4, 32, 2000, s);
  CHECK(std::abs(big.mean - page_entropy(4, 32)) < 5e-3);

  CHECK_THROWS_AS(page_average(4, 2, 10, s), DomainError);
  auto swapped = page_average(4, 2, 10, s, Orientation::Swap);
  CHECK(swapped.samples == 10);
  CHECK_THROWS_AS(page_average(2, 2, 0, s), DomainError);
}

TEST_CASE("Page Monte Carlo does not depend on thread count") {
  SeededSampler a(8), b(8);
  CHECK(page_samples(4, 16, 64, a, 1) == page_samples(4, 16, 64, b, 3));
}

TEST_CASE("entropy concentrates as the environment grows") {
  SeededSampler s(12);
  double prev = 1.0;
  for (std::uint64_t dB : {16, 64, 256}) {
    const double sd = page_average(4, dB, 500, s).std_dev;
    CHECK(sd < prev);
    prev = sd;
  }
}

TEST_CASE("sector random states") {
  SeededSampler s(4);
  auto empty = sector_random_state(6, 0, s);
  CHECK(std::abs(std::abs(empty.state.amplitudes(0)) - 1.0) < 1e-15);
  CHECK(entanglement_entropy(empty.state, 3) == 0.0);
  auto full = sector_random_state(6, 6, s);
  CHECK(std::abs(std::abs(full.state.amplitudes(63)) - 1.0) < 1e-15);

  auto mid = sector_random_state(8, 3, s);
  CHECK(mid.state.norm() == doctest::Approx(1.0).epsilon(1e-14));
  for (Eigen::Index i = 0; i < 256; ++i) {
    if (std::popcount(static_cast<unsigned>(i)) != 3) CHECK(mid.state.amplitudes(i) == cplx(0.0));
  }
  CHECK_THROWS_AS(sector_random_state(6, 7, s), DomainError);
}

TEST_CASE("block decomposition") {
  SeededSampler s(6);
  auto empty = block_populations(sector_random_state(6, 0, s), 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].weight == 1.0);
  CHECK(empty[0].entropy == 0.0);
  CHECK(entropy_from_blocks(empty) == 0.0);

  auto mid = sector_random_state(10, 5, s);
  auto blocks = block_populations(mid, 5);
  CHECK(blocks.size() == 6);
  double total = 0.0;
  for (const auto& b : blocks) {
    total += b.weight;
    CHECK(b.rows == binomial(5, b.k));
    CHECK(b.cols == binomial(5, 5 - b.k));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(block_populations(mid, 0), DomainError);
}

TEST_CASE("block reconstruction reproduces the full entropy") {
  SeededSampler s(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10;
    const int j = trial % (n + 1);
    const int m = 1 + trial % (n - 1);
    auto st = sector_random_state(n, j, s);
    CHECK(std::abs(entropy_from_blocks(block_populations(st, m)) - entanglement_entropy(st.state, m)) < 1e-9);
  }
}

TEST_CASE("block weights average to their expected values") {
  const int n = 12, j = 6, m = 6;
  SeededSampler s(8);
  std::vector<std::vector<double>> w(7);
  for (int i = 0; i < 500; ++i) {
    for (const auto& b : block_populations(sector_random_state(n, j, s), m)) {
      w[static_cast<std::size_t>(b.k)].push_back(b.weight);
    }
  }
  double expected_total = 0.0;
  for (int k = 0; k <= 6; ++k) {
    auto e = summarize(w[static_cast<std::size_t>(k)]);
    const double expected = expected_block_weight(n, m, j, k);
    expected_total += expected;
    CHECK(std::abs(e.mean - expected) < 3.0 * e.std_error + 1e-12);
  }
  CHECK(expected_total == doctest::Approx(1.0));
  CHECK(expected_block_weight(12, 6, 6, 0) == doctest::Approx(1.0 / 924.0));
}

TEST_CASE("two-site model reduces to the binary entropy integral") {
  // S = h(p) with p ~ U[0,1] in the j = 1 sector; other sectors are products.
  const double binary = oracle::simpson(
      [](double p) { return p <= 0.0 || p >= 1.0 ? 0.0 : -p * std::log(p) - (1 - p) * std::log(1 - p); }, 0.0,
      1.0);
  CHECK(binary == doctest::Approx(0.5).epsilon(1e-6));
  auto est = model_m_average(2, 1, 4000, 11);
  CHECK(std::abs(est.mean - binary / 2.0) < 3.0 * est.std_error);
  CHECK(est.sectors[0].entropy.mean == 0.0);
  CHECK(est.sectors[2].entropy.mean == 0.0);
}

TEST_CASE("model M bookkeeping") {
  auto est = model_m_average(8, 4, 30, 5);
  REQUIRE(est.sectors.size() == 9);
  CHECK(est.sectors[0].entropy.mean == 0.0);
  CHECK(est.sectors[0].entropy.std_error == 0.0);
  CHECK(est.sectors[8].entropy.mean == 0.0);
  double weighted = 0.0;
  for (const auto& s : est.sectors) {
    CHECK(s.dim == binomial(8, s.j));
    CHECK(s.entropy.samples == 30);
    weighted += static_cast<double>(s.dim) / 256.0 * s.entropy.mean;
  }
  CHECK(est.mean == doctest::Approx(weighted).epsilon(1e-14));
  CHECK(est.mean <= 4 * std::numbers::ln2);

  CHECK_THROWS_AS(model_m_average(8, 8, 10, 1), DomainError);
  CHECK_THROWS_AS(model_m_average(1, 1, 10, 1), DomainError);
  CHECK_THROWS_AS(model_m_average(8, 4, 0, 1), DomainError);

  std::ostringstream os;
  write_sector_table_csv(os, est);
  CHECK(os.str().rfind("j,dim,samples,mean_S,std_error\n0,1,30,0,0\n", 0) == 0);
}

TEST_CASE("model M is independent of thread count") {
  auto a = model_m_average(8, 4, 20, 3, 1);
  auto b = model_m_average(8, 4, 20, 3, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("standard error shrinks with more samples") {
  auto small = model_m_average(10, 5, 200, 21);
  auto large = model_m_average(10, 5, 400, 22);
  const double ratio = large.std_error / small.std_error;
  CHECK(ratio >= 0.6);
  CHECK(ratio <= 0.85);
}
