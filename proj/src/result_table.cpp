#include "eigenent/result_table.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "eigenent/errors.hpp"

#ifndef EIGENENT_VERSION
#define EIGENENT_VERSION "unknown"
#endif

namespace eigenent {

namespace {

template <class T>
void put(std::ostream& out, const std::optional<T>& v) {
  if (v) out << *v;
}

void check_finite(double v, const ResultRow& row) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in row '" + row.quantity + "'");
}

}  // namespace

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Ok:
      return "ok";
    case RowStatus::Violation:
      return "violation";
    case RowStatus::Failure:
      return "failure";
    case RowStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

ResultRow& ResultTable::add(ResultRow row) {
  rows.push_back(std::move(row));
  return rows.back();
}

std::size_t ResultTable::count(RowStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ResultRow& r) { return r.status == status; }));
}

const ResultRow* ResultTable::find(const std::string& quantity, std::optional<int> n,
                                   std::optional<int> m) const {
  for (const auto& r : rows) {
    if (r.quantity != quantity) continue;
    if (n && r.n != n) continue;
    if (m && r.m != m) continue;
    return &r;
  }
  return nullptr;
}

std::vector<const ResultRow*> ResultTable::select(const std::string& quantity) const {
  std::vector<const ResultRow*> out;
  for (const auto& r : rows) {
    if (r.quantity == quantity) out.push_back(&r);
  }
  return out;
}

void ResultTable::sort_rows() {
  auto key = [](const ResultRow& r) { return std::tie(r.g, r.h, r.n, r.m, r.dA, r.dB, r.quantity, r.index); };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const ResultRow& a, const ResultRow& b) { return key(a) < key(b); });
}

const std::string& csv_header() {
  static const std::string header =
      "schema_version,experiment,seed,g,h,n,m,f,dA,dB,quantity,index,energy,value,std_error,status";
  return header;
}

void write_csv(std::ostream& out, const ResultTable& table) {
  out << csv_header() << '\n';
  out << std::setprecision(17);
  for (const auto& r : table.rows) {
    check_finite(r.value, r);
    for (const auto* opt : {&r.g, &r.h, &r.f, &r.energy, &r.std_error}) {
      if (*opt) check_finite(**opt, r);
    }
    out << kCsvSchemaVersion << ',' << table.experiment << ',' << table.seed << ',';
    put(out, r.g);
    out << ',';
    put(out, r.h);
    out << ',';
    put(out, r.n);
    out << ',';
    put(out, r.m);
    out << ',';
    put(out, r.f);
    out << ',';
    put(out, r.dA);
    out << ',';
    put(out, r.dB);
    out << ',' << r.quantity << ',';
    put(out, r.index);
    out << ',';
    put(out, r.energy);
    out << ',' << r.value << ',';
    put(out, r.std_error);
    out << ',' << to_string(r.status) << '\n';
  }
}

void write_metadata_json(std::ostream& out, const ResultTable& table) {
  nlohmann::json j;
  j["experiment"] = table.experiment;
  j["seed"] = table.seed;
  j["timestamp"] = table.timestamp;
  j["code_version"] = table.version;
  j["schema_version"] = kCsvSchemaVersion;
  j["rows"] = table.rows.size();
  j["violations"] = table.count(RowStatus::Violation);
  j["failures"] = table.count(RowStatus::Failure);
  j["warnings"] = table.warnings;
  j["attachments"] = nlohmann::json::array();
  for (const auto& a : table.attachments) j["attachments"].push_back(a.first);
  out << j.dump(2) << '\n';
}

void save_table(const std::string& dir, const ResultTable& table) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  std::ofstream csv(base / (table.experiment + ".csv"));
  std::ofstream meta(base / (table.experiment + "_meta.json"));
  if (!csv || !meta) throw BackendError("cannot write results into " + dir);
  write_csv(csv, table);
  write_metadata_json(meta, table);
  for (const auto& [name, contents] : table.attachments) {
    std::ofstream extra(base / name);
    if (!extra) throw BackendError("cannot write " + name + " into " + dir);
    extra << contents;
  }
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string code_version() { return EIGENENT_VERSION; }

}  // namespace eigenent
