#include "eigenent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "eigenent/eigensolve.hpp"
#include "eigenent/entanglement.hpp"
#include "eigenent/errors.hpp"
#include "eigenent/parallel.hpp"
#include "eigenent/model_hamiltonians.hpp"
#include "eigenent/random_states.hpp"
#include "eigenent/sampler.hpp"
#include "eigenent/theory.hpp"

namespace eigenent {

namespace {

constexpr double kLn2 = std::numbers::ln2;

ResultTable new_table(const ExperimentConfig& config) {
  ResultTable t;
  t.experiment = config.experiment;
  t.seed = config.seed;
  t.timestamp = current_timestamp();
  t.version = code_version();
  return t;
}

SolveOptions solve_options(const ExperimentConfig& config) {
  SolveOptions o;
  o.dense_cap = config.caps.dense;
  o.sector_cap = config.caps.sector;
  o.threads = config.threads;
  return o;
}

ResultRow chain_row(const Coupling& cp, int n, std::string quantity, double value) {
  ResultRow r;
  r.g = cp.g;
  r.h = cp.h;
  r.n = n;
  r.quantity = std::move(quantity);
  r.value = value;
  return r;
}

ResultRow cut_row(const Coupling& cp, int n, int m, std::string quantity, double value) {
  ResultRow r = chain_row(cp, n, std::move(quantity), value);
  r.m = m;
  r.f = static_cast<double>(m) / n;
  return r;
}

void skip(ResultTable& t, const Coupling& cp, int n, const std::string& why) {
  ResultRow r = chain_row(cp, n, "skipped", 0.0);
  r.status = RowStatus::Skipped;
  t.add(r);
  t.warnings.push_back("n = " + std::to_string(n) + ": " + why);
}

std::string number_tag(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

}  // namespace

ResultTable run_figure1(const ExperimentConfig& config) {
  validate(config);
  ResultTable t = new_table(config);
  const SolveOptions opts = solve_options(config);
  for (const Coupling& cp : config.couplings) {
    for (int n : config.n_values) {
      if (n > config.caps.sector) {
        skip(t, cp, n, "exceeds the sector cap of " + std::to_string(config.caps.sector));
        continue;
      }
      const Spectrum spec = diagonalize_sectors(build_chaotic_ising(n, cp.g, cp.h), opts);
      t.add(chain_row(cp, n, "degenerate_states", static_cast<double>(spec.degenerate_states())));
      for (int m = 1; 2 * m <= n; ++m) {
        const EntropyAverage avg = average_eigenstate_entropy(spec, m, config.threads);
        const double correction = m * kLn2 - avg.mean;
        const double theory = universal_correction(static_cast<double>(m) / n);
        // The cut n - m has the same spectrum of reduced states.
        std::vector<int> cuts{m};
        if (n - m != m) cuts.push_back(n - m);
        for (int cut : cuts) {
          t.add(cut_row(cp, n, cut, "mean_entropy", avg.mean));
          t.add(cut_row(cp, n, cut, "correction", correction));
          t.add(cut_row(cp, n, cut, "theory", theory));
        }
        if (config.write_records) {
          std::ostringstream os;
          write_entropy_records_csv(os, avg.records);
          t.attachments.emplace_back("figure1_records_g" + number_tag(cp.g) + "_h" + number_tag(cp.h) + "_n" +
                                         std::to_string(n) + "_m" + std::to_string(m) + ".csv",
                                     os.str());
        }
      }
    }
  }
  t.sort_rows();
  return t;
}

ResultTable run_bounds(const ExperimentConfig& config) {
  validate(config);
  ResultTable t = new_table(config);
  const SolveOptions opts = solve_options(config);

  for (const Coupling& cp : config.couplings) {
    std::vector<double> tightness;
    for (int n : config.n_values) {
      if (n > config.caps.sector) {
        skip(t, cp, n, "exceeds the sector cap of " + std::to_string(config.caps.sector));
        continue;
      }
      const ChainHamiltonian H = build_chaotic_ising(n, cp.g, cp.h);
      const double moment = infinite_temperature_moment(H);
      const double norm = local_term_norm(H);
      const Spectrum spec = diagonalize_sectors(H, opts);

      {
        const auto& E = spec.eigenvalues();
        std::vector<double> sq(E.size());
        std::transform(E.begin(), E.end(), sq.begin(), [](double e) { return e * e; });
        const double mean_sq = pairwise_sum(sq.begin(), sq.end()) / static_cast<double>(sq.size());
        const double expected = n * moment;
        ResultRow r = chain_row(cp, n, "spectral_identity_rel_error", std::abs(mean_sq - expected) / expected);
        if (r.value > 1e-8) r.status = RowStatus::Violation;
        t.add(r);
      }

      std::vector<int> cuts = config.m_values;
      for (int m : {2, n / 2}) {
        if (std::find(cuts.begin(), cuts.end(), m) == cuts.end()) cuts.push_back(m);
      }
      for (int m : cuts) {
        if (2 * m > n) continue;
        const EntropyAverage avg = average_eigenstate_entropy(spec, m, config.threads);
        const bool lemma_cut =
            m % 2 == 0 && std::find(config.m_values.begin(), config.m_values.end(), m) != config.m_values.end();
        if (lemma_cut) {
          std::size_t violations = 0;
          double min_slack = std::numeric_limits<double>::infinity();
          for (const EntropyRecord& rec : avg.records) {
            const double energy = rec.energy / norm;
            const BoundReport rep = make_bound_report("lemma", lemma_bound(m, n, energy), rec.entropy);
            ResultRow r = cut_row(cp, n, m, "lemma_slack", rep.slack);
            r.index = static_cast<std::int64_t>(rec.index);
            r.energy = energy;
            if (!rep.pass) {
              r.status = RowStatus::Violation;
              ++violations;
            }
            min_slack = std::min(min_slack, rep.slack);
            t.add(r);
          }
          t.add(cut_row(cp, n, m, "lemma_violations", static_cast<double>(violations)));
          t.add(cut_row(cp, n, m, "lemma_min_slack", min_slack));
        }
        if (2 * m == n) {
          const BoundReport rep = make_bound_report("theorem", theorem_bound(m, n, moment, norm), avg.mean);
          t.add(cut_row(cp, n, m, "theorem_bound", rep.bound));
          t.add(cut_row(cp, n, m, "mean_entropy", avg.mean));
          ResultRow r = cut_row(cp, n, m, "theorem_slack", rep.slack);
          if (!rep.pass) r.status = RowStatus::Violation;
          t.add(r);
        }
        if (m == 2) {
          const double scaled = n * (2.0 * kLn2 - avg.mean);
          tightness.push_back(scaled);
          t.add(cut_row(cp, n, m, "tightness_scaled_deficit", scaled));
        }
      }
    }
    if (tightness.size() >= 2) {
      const auto [lo, hi] = std::minmax_element(tightness.begin(), tightness.end());
      ResultRow r;
      r.g = cp.g;
      r.h = cp.h;
      r.m = 2;
      r.quantity = "tightness_band_ratio";
      r.value = *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::max();
      if (!(*lo > 0.0) || r.value > config.tightness_band) r.status = RowStatus::Violation;
      t.add(r);
    }
  }

  // Disordered chain: average over eigenstates and over window placements.
  const DisorderConfig& d = config.disorder;
  const Coupling center = config.couplings.empty() ? Coupling{} : config.couplings.front();
  for (int i = 0; i < d.seeds; ++i) {
    if (d.n > config.caps.dense) {
      skip(t, center, d.n, "disordered chain exceeds the dense cap");
      break;
    }
    const std::uint64_t seed = SeededSampler::derive(config.seed, {0xD150ULL, static_cast<std::uint64_t>(i)}).seed();
    const Spectrum spec = diagonalize_dense(build_disordered(d.n, center.g, center.h, d.w, seed), opts);
    const double averaged = cut_averaged_entropy(spec, d.m, config.threads);
    ResultRow r = cut_row(center, d.n, d.m, "disordered_gap", d.m * kLn2 - averaged);
    r.index = i;
    if (!(r.value > d.min_gap)) r.status = RowStatus::Violation;
    t.add(r);
  }

  t.sort_rows();
  return t;
}

ResultTable run_modelm(const ExperimentConfig& config) {
  validate(config);
  ResultTable t = new_table(config);
  for (int n : config.n_values) {
    if (n > config.caps.model_m) {
      skip(t, Coupling{}, n, "exceeds the model-M cap of " + std::to_string(config.caps.model_m));
      t.rows.back().g.reset();
      t.rows.back().h.reset();
      continue;
    }
    for (double f : config.f_values) {
      const int m = static_cast<int>(std::lround(f * n));
      const std::uint64_t seed =
          SeededSampler::derive(config.seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)}).seed();
      const ModelMEstimate est = model_m_average(n, m, config.samples_per_sector, seed, config.threads);
      const double fr = std::min(f, 1.0 - f);
      auto row = [&](std::string q, double v) {
        ResultRow r;
        r.n = n;
        r.m = m;
        r.f = static_cast<double>(m) / n;
        r.quantity = std::move(q);
        r.value = v;
        return r;
      };
      for (const SectorEstimate& s : est.sectors) {
        ResultRow r = row("sector_entropy", s.entropy.mean);
        r.index = s.j;
        r.std_error = s.entropy.std_error;
        t.add(r);
        const double J = make_asymptotic_params(n, m, s.j, 0).J;
        ResultRow p = row("sector_formula", fr == 0.5 ? sector_entropy_half(n, J) : sector_entropy_flt_half(n, fr, J));
        p.index = s.j;
        t.add(p);
      }
      ResultRow agg = row("aggregate_entropy", est.mean);
      agg.std_error = est.std_error;
      t.add(agg);
      const double formula = universal_entropy(n, fr);
      t.add(row("universal_formula", formula));
      t.add(row("aggregate_deviation", est.mean - formula));

      std::ostringstream os;
      write_sector_table_csv(os, est);
      t.attachments.emplace_back("modelm_sectors_n" + std::to_string(n) + "_m" + std::to_string(m) + ".csv",
                                 os.str());
    }
  }
  t.sort_rows();
  return t;
}

ResultTable run_page(const ExperimentConfig& config) {
  validate(config);
  ResultTable t = new_table(config);
  auto row = [](std::uint64_t a, std::uint64_t b, std::string q, double v) {
    ResultRow r;
    r.dA = a;
    r.dB = b;
    r.quantity = std::move(q);
    r.value = v;
    return r;
  };
  auto estimate = [&](std::uint64_t a, std::uint64_t b) {
    SeededSampler sampler = SeededSampler::derive(config.seed, {a, b});
    const std::vector<double> s = page_samples(a, b, config.trials, sampler, config.threads);
    return summarize(s);
  };

  for (auto [a, b] : config.page_grid) {
    if (a > b) std::swap(a, b);
    const double exact = page_entropy(a, b);
    const MonteCarloEstimate est = estimate(a, b);
    t.add(row(a, b, "exact", exact));
    t.add(row(a, b, "asymptotic", page_asymptotic(a, b).value));
    ResultRow mc = row(a, b, "monte_carlo", est.mean);
    mc.std_error = est.std_error;
    t.add(mc);
    t.add(row(a, b, "std_dev", est.std_dev));
    t.add(row(a, b, "mc_deviation", est.mean - exact));
  }

  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (std::uint64_t b : {16U, 64U, 256U}) {
    const double sd = estimate(4, b).std_dev;
    t.add(row(4, b, "concentration_std", sd));
    decreasing = decreasing && sd < previous;
    previous = sd;
  }
  ResultRow mono = row(4, 0, "concentration_decreasing", decreasing ? 1.0 : 0.0);
  mono.dB.reset();
  if (!decreasing) mono.status = RowStatus::Violation;
  t.add(mono);
  t.sort_rows();
  return t;
}

ResultTable run_quadcheck(const ExperimentConfig& config) {
  validate(config);
  ResultTable t = new_table(config);
  auto row = [](std::string q, double v) {
    ResultRow r;
    r.quantity = std::move(q);
    r.value = v;
    return r;
  };
  auto fail = [&](const std::string& q, const QuadratureError& e) {
    ResultRow r = row(q, e.error_estimate());
    r.status = RowStatus::Failure;
    t.add(r);
    t.warnings.push_back(e.what());
  };

  try {
    const QuadratureResult q = gaussian_moment_integral();
    ResultRow r = row("gaussian_moment_integral", q.value);
    r.std_error = q.error_estimate;
    if (std::abs(q.value) > 1e-9) r.status = RowStatus::Failure;
    t.add(r);
  } catch (const QuadratureError& e) {
    fail("gaussian_moment_integral", e);
  }

  try {
    const QuadratureResult q = half_filling_sector_integral();
    ResultRow r = row("half_filling_integral", q.value);
    r.std_error = q.error_estimate;
    t.add(r);
    ResultRow d = row("half_filling_deviation", q.value + 2.0 / std::numbers::pi);
    if (std::abs(d.value) > 1e-6) d.status = RowStatus::Failure;
    t.add(d);
  } catch (const QuadratureError& e) {
    fail("half_filling_integral", e);
  }

  for (double f : config.f_values) {
    const double fr = std::min(f, 1.0 - f);
    try {
      const SectorAverage avg = average_over_sectors(fr);
      ResultRow a = row("sector_average_correction", avg.correction);
      a.f = f;
      a.std_error = avg.error_estimate;
      t.add(a);
      ResultRow u = row("universal_correction", -universal_correction(f));
      u.f = f;
      t.add(u);
      ResultRow d = row("sector_average_deviation", avg.correction + universal_correction(f));
      d.f = f;
      if (std::abs(d.value) > 1e-6) d.status = RowStatus::Failure;
      t.add(d);
    } catch (const QuadratureError& e) {
      fail("sector_average_correction", e);
    }
  }

  t.add(row("erfc_at_zero", eigenent::erfc(0.0)));
  double reflection = 0.0;
  for (double x : {0.5, 1.0, 2.0}) {
    reflection = std::max(reflection, std::abs(eigenent::erfc(x) + eigenent::erfc(-x) - 2.0));
  }
  ResultRow refl = row("erfc_reflection_error", reflection);
  if (reflection > 1e-12) refl.status = RowStatus::Failure;
  t.add(refl);
  t.sort_rows();
  return t;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "figure1") return run_figure1(config);
  if (config.experiment == "bounds") return run_bounds(config);
  if (config.experiment == "modelm") return run_modelm(config);
  if (config.experiment == "page") return run_page(config);
  if (config.experiment == "quadcheck") return run_quadcheck(config);
  throw ConfigError("unknown experiment '" + config.experiment + "'");
}

int exit_code_for(const ResultTable& table) {
  return table.count(RowStatus::Violation) + table.count(RowStatus::Failure) == 0 ? kExitOk : kExitViolation;
}

}  // namespace eigenent
