#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace riskexplain::data {

// Maps metric ids and the three structural roles to source column names.
// Defaults target the PROMISE defect-dataset schema.
struct ColumnMapping {
  std::string name_column = "name";
  std::string version_column = "version";  // optional in the source file
  std::string bug_column = "bug";
  // insertion order defines metric presentation order
  std::vector<std::pair<std::string, std::string>> metric_columns = {
      {"cbo", "cbo"}, {"rfc", "rfc"}, {"lcom", "lcom"}, {"wmc", "wmc"}};

  std::vector<std::string> metric_ids() const;
  const std::string* column_for(const std::string& metric_id) const;
  void set_metric_column(const std::string& metric_id, const std::string& column);
};

struct ClassRecord {
  std::string class_name;
  // nullopt marks a cell that failed to parse; such metrics are excluded
  // from baselines and surfaced as "not available" in reports.
  std::map<std::string, std::optional<double>> metrics;
  long bug_count = 0;
  std::size_t row_index = 0;  // 0-based data-row ordinal; identity for duplicates

  std::optional<double> metric_value(const std::string& metric_id) const;
};

struct ProjectDataset {
  std::string project_name;
  std::string version;
  std::vector<ClassRecord> records;
  ColumnMapping column_mapping;

  // "Apache Camel 1.6" when both parts are set.
  std::string context_label() const;
};

struct DatasetSummary {
  std::size_t class_count = 0;
  std::size_t buggy_count = 0;  // records with bug_count >= 1
  double buggy_rate = 0.0;      // exact quotient buggy_count / class_count
};

struct LoadReport {
  std::vector<std::string> issues;  // one line per malformed cell or dropped row
  std::size_t rows_loaded = 0;
  std::size_t rows_skipped = 0;
  std::size_t missing_cells = 0;
};

struct LoadResult {
  ProjectDataset dataset;
  LoadReport report;
};

// Loads a CSV into a dataset. Unparseable metric cells become per-metric
// missing markers and are listed in the load report; rows with an empty name
// or a wrong field count are skipped with a report entry. Throws InputError
// for a missing file, a header lacking a mapped column (naming it), or zero
// data rows. When `version` is empty the first non-empty version cell wins.
LoadResult load_dataset(const std::string& path, const ColumnMapping& mapping,
                        const std::string& project_name, const std::string& version = "");

LoadResult load_dataset_from_string(const std::string& content, const ColumnMapping& mapping,
                                    const std::string& project_name,
                                    const std::string& version = "",
                                    const std::string& origin = "<memory>");

DatasetSummary dataset_summary(const ProjectDataset& dataset);

// Canonical CSV: name, version, metric ids in mapping order, bug. Missing
// metrics serialize as empty cells. Reloading with the identity mapping
// reproduces the records exactly.
std::string to_canonical_csv(const ProjectDataset& dataset);

}  // namespace riskexplain::data
