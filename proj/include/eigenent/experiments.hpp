#pragma once

// End-to-end experiments driven by ExperimentConfig. Runners are pure: they
// return a ResultTable (rows plus attachments) and never touch the disk.

#include "eigenent/config.hpp"
#include "eigenent/result_table.hpp"

namespace eigenent {

// Eigenstate-averaged entropy of the chaotic Ising chain for every cut,
// reported as the deficit from min(f, 1-f) n ln 2 next to the universal curve.
ResultTable run_figure1(const ExperimentConfig& config);

// Spectral identity, per-eigenstate and averaged upper bounds, the
// disordered cut-averaged bound, and the m = 2 scaling diagnostic.
ResultTable run_bounds(const ExperimentConfig& config);

// Sector-resolved random-basis model versus the asymptotic sector formulas.
ResultTable run_modelm(const ExperimentConfig& config);

// Haar Monte Carlo against the exact mean entropy, plus concentration.
ResultTable run_page(const ExperimentConfig& config);

// Gaussian integrals behind the universal formula, and erfc sanity checks.
ResultTable run_quadcheck(const ExperimentConfig& config);

ResultTable run_experiment(const ExperimentConfig& config);

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2, kExitBackend = 3 };

// 0 iff the table has no violation or failure rows.
int exit_code_for(const ResultTable& table);

}  // namespace eigenent
