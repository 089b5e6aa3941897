#include "eigenent/entanglement.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>

#include "eigenent/errors.hpp"
#include "eigenent/parallel.hpp"
#include "eigenent/spin_basis.hpp"

namespace eigenent {

namespace {

void check_cut(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw DomainError("subsystem size " + std::to_string(m) + " outside [1, " +
                      std::to_string(n - 1) + "]");
  }
}

}  // namespace

SchmidtSpectrum schmidt_spectrum(const Eigen::Ref<const Eigen::VectorXcd>& amplitudes,
                                 Eigen::Index rows, Eigen::Index cols) {
  if (rows * cols != amplitudes.size()) throw DomainError("bipartition does not match state dimension");
  const Eigen::Map<const Eigen::MatrixXcd> psi(amplitudes.data(), rows, cols);
  SchmidtSpectrum out;
  if (rows == 1 || cols == 1) {
    out.probabilities.push_back(amplitudes.squaredNorm());
    return out;
  }
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi);
  const Eigen::VectorXd& s = svd.singularValues();
  out.probabilities.resize(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) out.probabilities[static_cast<std::size_t>(i)] = s(i) * s(i);
  std::sort(out.probabilities.begin(), out.probabilities.end(), std::greater<>());
  return out;
}

SchmidtSpectrum schmidt_spectrum(const PureState& v, int m) {
  check_cut(v.n, m);
  return schmidt_spectrum(v.amplitudes, Eigen::Index{1} << m, Eigen::Index{1} << (v.n - m));
}

double von_neumann_entropy(std::vector<double> p) {
  double total = 0.0;
  for (double& x : p) {
    if (x < 0.0) {
      if (x < -1e-12) throw DomainError("negative probability in spectrum");
      x = 0.0;
    }
    total += x;
  }
  const double deviation = std::abs(total - 1.0);
  if (deviation > 1e-8) throw DomainError("spectrum is not normalized (sum = " + std::to_string(total) + ")");
  if (deviation <= 1e-10 && total > 0.0) {
    for (double& x : p) x /= total;
  }
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum) {
  return von_neumann_entropy(spectrum.probabilities);
}

double entanglement_entropy(const PureState& v, int m) {
  return von_neumann_entropy(schmidt_spectrum(v, m));
}

Eigen::Matrix4cd two_site_rdm(const PureState& v, int site) {
  if (site < 1 || site > v.n || v.n < 2) throw DomainError("site out of range for two-site state");
  const int lo = site - 1;
  const int hi = site % v.n;
  const std::uint64_t lo_bit = std::uint64_t{1} << lo;
  const std::uint64_t hi_bit = std::uint64_t{1} << hi;
  auto place = [&](std::uint64_t rest, int a) {
    return rest | ((a & 1) ? lo_bit : 0) | ((a & 2) ? hi_bit : 0);
  };
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const auto dim = static_cast<std::uint64_t>(v.dim());
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (s & (lo_bit | hi_bit)) continue;  // visit each environment configuration once
    std::array<cplx, 4> psi;
    for (int a = 0; a < 4; ++a) psi[a] = v.amplitudes(static_cast<Eigen::Index>(place(s, a)));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) rho(a, b) += psi[a] * std::conj(psi[b]);
  }
  return rho;
}

double local_energy(const PureState& v, const ChainHamiltonian& H, int site) {
  if (v.n != H.n) throw DomainError("state and Hamiltonian sizes differ");
  return (two_site_rdm(v, site) * local_term_matrix(H, site)).trace().real();
}

PureState translate(const PureState& v, int steps) {
  PureState out = PureState::zero(v.n);
  const auto dim = static_cast<std::uint64_t>(v.dim());
  for (std::uint64_t s = 0; s < dim; ++s) {
    out.amplitudes(static_cast<Eigen::Index>(cyclic_shift(BasisState{s}, v.n, steps).mask)) =
        v.amplitudes(static_cast<Eigen::Index>(s));
  }
  return out;
}

EntropyAverage average_eigenstate_entropy(const Spectrum& spectrum, int m, int threads) {
  if (!spectrum.has_eigenvectors()) throw DomainError("entropy average needs eigenvectors");
  check_cut(spectrum.sites(), m);
  EntropyAverage out;
  out.records.resize(spectrum.size());
  parallel_for(spectrum.size(), threads, [&](std::size_t j) {
    out.records[j] = {j, spectrum.eigenvalue(j), m, entanglement_entropy(spectrum.eigenvector(j), m),
                      spectrum.sector(j)};
  });
  std::vector<double> s(out.records.size());
  std::transform(out.records.begin(), out.records.end(), s.begin(),
                 [](const EntropyRecord& r) { return r.entropy; });
  out.mean = pairwise_sum(s.begin(), s.end()) / static_cast<double>(s.size());
  return out;
}

double cut_averaged_entropy(const Spectrum& spectrum, int m, int threads) {
  if (!spectrum.has_eigenvectors()) throw DomainError("entropy average needs eigenvectors");
  const int n = spectrum.sites();
  check_cut(n, m);
  std::vector<double> per_state(spectrum.size());
  parallel_for(spectrum.size(), threads, [&](std::size_t j) {
    const PureState v = spectrum.eigenvector(j);
    std::vector<double> cuts(static_cast<std::size_t>(n));
    // window starting at spin c+1 moved onto spins 1..m
    for (int c = 0; c < n; ++c) cuts[static_cast<std::size_t>(c)] = entanglement_entropy(translate(v, -c), m);
    per_state[j] = pairwise_sum(cuts.begin(), cuts.end()) / n;
  });
  return pairwise_sum(per_state.begin(), per_state.end()) / static_cast<double>(per_state.size());
}

void write_entropy_records_csv(std::ostream& out, const std::vector<EntropyRecord>& records) {
  out << "j,E_j,m,S,sector\n";
  out << std::setprecision(17);
  for (const auto& r : records) {
    out << r.index << ',' << r.energy << ',' << r.m << ',' << r.entropy << ',';
    if (r.sector == kFullSpace) {
      out << "full";
    } else {
      out << r.sector;
    }
    out << '\n';
  }
}

}  // namespace eigenent
