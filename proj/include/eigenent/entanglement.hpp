#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "eigenent/eigensolve.hpp"
#include "eigenent/model_hamiltonians.hpp"
#include "eigenent/pure_state.hpp"

namespace eigenent {

// Squared Schmidt coefficients, descending.
struct SchmidtSpectrum {
  std::vector<double> probabilities;
};

struct EntropyRecord {
  std::size_t index = 0;
  double energy = 0.0;
  int m = 0;
  double entropy = 0.0;
  int sector = kFullSpace;
};

struct EntropyAverage {
  double mean = 0.0;
  std::vector<EntropyRecord> records;
};

// Subsystem A = spins 1..m (low bits); 1 <= m <= n-1.
SchmidtSpectrum schmidt_spectrum(const PureState& v, int m);
// Amplitudes of a bipartite state laid out column-major as rows x cols.
SchmidtSpectrum schmidt_spectrum(const Eigen::Ref<const Eigen::VectorXcd>& amplitudes,
                                 Eigen::Index rows, Eigen::Index cols);

// -sum p ln p in nats, 0 ln 0 = 0.
double von_neumann_entropy(const SchmidtSpectrum& spectrum);
double von_neumann_entropy(std::vector<double> probabilities);

double entanglement_entropy(const PureState& v, int m);

// Reduced state of spins (site, site+1), site wrapping; index b_site + 2 b_{site+1}.
Eigen::Matrix4cd two_site_rdm(const PureState& v, int site);

// <v|H_site|v> evaluated through the two-site reduced density matrix.
double local_energy(const PureState& v, const ChainHamiltonian& H, int site);

// |w> = T^steps |v>, moving spin i to spin i + steps.
PureState translate(const PureState& v, int steps);

EntropyAverage average_eigenstate_entropy(const Spectrum& spectrum, int m, int threads = 1);

// Mean over all eigenstates and all n placements of a length-m window.
double cut_averaged_entropy(const Spectrum& spectrum, int m, int threads = 1);

// Columns: j,E_j,m,S,sector
void write_entropy_records_csv(std::ostream& out, const std::vector<EntropyRecord>& records);

}  // namespace eigenent
