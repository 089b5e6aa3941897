#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eigenent {

inline constexpr int kCsvSchemaVersion = 1;

enum class RowStatus { Ok, Violation, Failure, Skipped };

std::string to_string(RowStatus status);

struct ResultRow {
  std::optional<double> g;
  std::optional<double> h;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> f;
  std::optional<std::uint64_t> dA;
  std::optional<std::uint64_t> dB;
  std::string quantity;
  std::optional<std::int64_t> index;
  std::optional<double> energy;
  double value = 0.0;
  std::optional<double> std_error;
  RowStatus status = RowStatus::Ok;
};

struct ResultTable {
  std::string experiment;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string version;
  std::vector<ResultRow> rows;
  std::vector<std::string> warnings;
  // Auxiliary CSV files (file name, contents) saved next to the main table.
  std::vector<std::pair<std::string, std::string>> attachments;

  ResultRow& add(ResultRow row);
  std::size_t count(RowStatus status) const;
  // First row with this quantity and matching (n, m), if any.
  const ResultRow* find(const std::string& quantity, std::optional<int> n = {},
                        std::optional<int> m = {}) const;
  std::vector<const ResultRow*> select(const std::string& quantity) const;

  // Rows ordered by (g, h, n, m, dA, dB, quantity, index); stable otherwise.
  void sort_rows();
};

// Header line of every experiment CSV.
const std::string& csv_header();

// Throws std::runtime_error on non-finite values. Output depends only on the
// rows, the experiment name and the seed.
void write_csv(std::ostream& out, const ResultTable& table);
void write_metadata_json(std::ostream& out, const ResultTable& table);

// Writes <dir>/<experiment>.csv, <dir>/<experiment>_meta.json and attachments.
void save_table(const std::string& dir, const ResultTable& table);

std::string current_timestamp();
std::string code_version();

}  // namespace eigenent
