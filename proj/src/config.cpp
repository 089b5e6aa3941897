#include "eigenent/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "eigenent/errors.hpp"

namespace eigenent {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig default_config(const std::string& experiment) {
  ExperimentConfig c;
  c.experiment = experiment;
  c.couplings = {{1.05, 0.5}, {0.905, 0.809}};
  if (experiment == "figure1") {
    c.n_values = {8, 10, 12};
  } else if (experiment == "bounds") {
    c.n_values = {8, 10, 12};
    c.m_values = {2, 4};
  } else if (experiment == "modelm") {
    c.n_values = {14};
    c.f_values = {0.5};
  } else if (experiment == "page") {
    c.page_grid = {{1, 8}, {2, 2}, {2, 8}, {4, 16}, {4, 32}, {4, 64}, {4, 256}, {8, 8}};
  } else if (experiment == "quadcheck") {
    c.f_values = {0.125, 0.25, 0.375, 0.5};
  } else {
    throw ConfigError("unknown experiment '" + experiment + "'");
  }
  return c;
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["couplings"] = json::array();
  for (const auto& cp : c.couplings) j["couplings"].push_back({{"g", cp.g}, {"h", cp.h}});
  j["n_values"] = c.n_values;
  j["m_values"] = c.m_values;
  j["f_values"] = c.f_values;
  j["disorder"] = {{"w", c.disorder.w},
                   {"seeds", c.disorder.seeds},
                   {"n", c.disorder.n},
                   {"m", c.disorder.m},
                   {"min_gap", c.disorder.min_gap}};
  j["seed"] = c.seed;
  j["samples_per_sector"] = c.samples_per_sector;
  j["trials"] = c.trials;
  j["page_grid"] = json::array();
  for (const auto& [a, b] : c.page_grid) j["page_grid"].push_back({a, b});
  j["output_dir"] = c.output_dir;
  j["threads"] = c.threads;
  j["caps"] = {{"dense", c.caps.dense}, {"sector", c.caps.sector}, {"model_m", c.caps.model_m}};
  j["tightness_band"] = c.tightness_band;
  j["write_records"] = c.write_records;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  reject_unknown(j,
                 {"experiment", "couplings", "n_values", "m_values", "f_values", "disorder", "seed",
                  "samples_per_sector", "trials", "page_grid", "output_dir", "threads", "caps",
                  "tightness_band", "write_records"},
                 "config");
  if (!j.contains("experiment")) throw ConfigError("config must name an experiment");
  ExperimentConfig c = default_config(j.at("experiment").get<std::string>());

  if (j.contains("couplings")) {
    if (!j.at("couplings").is_array()) throw ConfigError("couplings must be an array");
    c.couplings.clear();
    for (const auto& item : j.at("couplings")) {
      reject_unknown(item, {"g", "h"}, "couplings entry");
      Coupling cp;
      read(item, "g", cp.g);
      read(item, "h", cp.h);
      c.couplings.push_back(cp);
    }
  }
  read(j, "n_values", c.n_values);
  read(j, "m_values", c.m_values);
  read(j, "f_values", c.f_values);
  if (j.contains("disorder")) {
    const json& d = j.at("disorder");
    reject_unknown(d, {"w", "seeds", "n", "m", "min_gap"}, "disorder");
    read(d, "w", c.disorder.w);
    read(d, "seeds", c.disorder.seeds);
    read(d, "n", c.disorder.n);
    read(d, "m", c.disorder.m);
    read(d, "min_gap", c.disorder.min_gap);
  }
  read(j, "seed", c.seed);
  read(j, "samples_per_sector", c.samples_per_sector);
  read(j, "trials", c.trials);
  if (j.contains("page_grid")) {
    c.page_grid.clear();
    for (const auto& pair : j.at("page_grid")) {
      if (!pair.is_array() || pair.size() != 2) throw ConfigError("page_grid entries must be [dA, dB]");
      c.page_grid.emplace_back(pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>());
    }
  }
  read(j, "output_dir", c.output_dir);
  read(j, "threads", c.threads);
  if (j.contains("caps")) {
    const json& caps = j.at("caps");
    reject_unknown(caps, {"dense", "sector", "model_m"}, "caps");
    read(caps, "dense", c.caps.dense);
    read(caps, "sector", c.caps.sector);
    read(caps, "model_m", c.caps.model_m);
  }
  read(j, "tightness_band", c.tightness_band);
  read(j, "write_records", c.write_records);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

void save_config(const std::string& path, const ExperimentConfig& config) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file " + path);
  out << to_json(config).dump(2) << '\n';
}

void validate(const ExperimentConfig& c) {
  if (std::find(experiment_names().begin(), experiment_names().end(), c.experiment) ==
      experiment_names().end()) {
    throw ConfigError("unknown experiment '" + c.experiment + "'");
  }
  if (c.threads < 1) throw ConfigError("threads must be >= 1");
  for (int n : c.n_values) {
    if (n < 2) throw ConfigError("chain lengths must be >= 2");
  }
  if (c.experiment == "figure1" || c.experiment == "bounds") {
    if (c.couplings.empty()) throw ConfigError("at least one (g, h) coupling is required");
    for (int n : c.n_values) {
      if (n % 2 != 0) throw ConfigError("chain lengths must be even for " + c.experiment);
    }
  }
  if (c.experiment == "bounds") {
    for (int m : c.m_values) {
      if (m < 2 || m % 2 != 0) throw ConfigError("m_values for the lemma suite must be even and >= 2");
    }
    if (c.disorder.w < 0.0 || c.disorder.seeds < 1) throw ConfigError("bad disorder settings");
    if (c.disorder.m < 1 || c.disorder.m >= c.disorder.n) throw ConfigError("disorder m outside [1, n-1]");
  }
  if (c.experiment == "modelm") {
    if (c.samples_per_sector < 30) throw ConfigError("modelm needs samples_per_sector >= 30");
    for (int n : c.n_values) {
      for (double f : c.f_values) {
        const double m = f * n;
        if (!(f > 0.0 && f < 1.0) || std::abs(m - std::round(m)) > 1e-9) {
          throw ConfigError("f * n must be an integer in (0, n)");
        }
      }
    }
  }
  if (c.experiment == "page") {
    if (c.trials < 100) throw ConfigError("page needs trials >= 100");
    for (const auto& [a, b] : c.page_grid) {
      if (a < 1 || b < 1) throw ConfigError("page_grid dimensions must be positive");
    }
  }
  if (c.experiment == "quadcheck") {
    for (double f : c.f_values) {
      if (!(f > 0.0 && f < 1.0)) throw ConfigError("f_values must lie in (0, 1)");
    }
  }
}

}  // namespace eigenent
