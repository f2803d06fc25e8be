#include "riskexplain/dataset.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "riskexplain/csv.hpp"
#include "riskexplain/errors.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::data {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// exact match first, then unique case-insensitive match
std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       const std::string& wanted) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == wanted) return i;
  }
  std::optional<std::size_t> loose;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (text::to_lower(trim(header[i])) == text::to_lower(wanted)) {
      if (loose) return std::nullopt;  // ambiguous
      loose = i;
    }
  }
  return loose;
}

std::optional<double> parse_metric_cell(const std::string& raw) {
  std::string cell = trim(raw);
  if (cell.empty()) return std::nullopt;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  if (!std::isfinite(value) || value < 0.0) return std::nullopt;
  return value;
}

std::optional<long> parse_bug_cell(const std::string& raw) {
  std::string cell = trim(raw);
  if (cell.empty()) return std::nullopt;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  long value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

LoadResult build_dataset(const CsvTable& table, const ColumnMapping& mapping,
                         const std::string& project_name, const std::string& version,
                         const std::string& origin) {
  LoadResult result;
  result.dataset.project_name = project_name;
  result.dataset.version = version;
  result.dataset.column_mapping = mapping;

  auto require_column = [&](const std::string& column) -> std::size_t {
    auto idx = find_column(table.header, column);
    if (!idx) {
      throw InputError(fmt::format("{}: header is missing mapped column '{}'", origin, column));
    }
    return *idx;
  };

  std::size_t name_idx = require_column(mapping.name_column);
  std::size_t bug_idx = require_column(mapping.bug_column);
  std::optional<std::size_t> version_idx;
  if (!mapping.version_column.empty()) {
    version_idx = find_column(table.header, mapping.version_column);
  }
  std::vector<std::pair<std::string, std::size_t>> metric_idx;
  metric_idx.reserve(mapping.metric_columns.size());
  for (const auto& [metric_id, column] : mapping.metric_columns) {
    metric_idx.emplace_back(metric_id, require_column(column));
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      result.report.issues.push_back(fmt::format(
          "row {}: expected {} fields, got {}; row skipped", r + 1, table.header.size(),
          row.size()));
      ++result.report.rows_skipped;
      continue;
    }
    ClassRecord record;
    record.class_name = trim(row[name_idx]);
    if (record.class_name.empty()) {
      result.report.issues.push_back(fmt::format("row {}: empty class name; row skipped", r + 1));
      ++result.report.rows_skipped;
      continue;
    }
    record.row_index = result.dataset.records.size();
    for (const auto& [metric_id, idx] : metric_idx) {
      auto value = parse_metric_cell(row[idx]);
      if (!value) {
        result.report.issues.push_back(fmt::format(
            "row {} ({}): unparseable {} cell '{}'; treated as missing", r + 1,
            record.class_name, metric_id, trim(row[idx])));
        ++result.report.missing_cells;
      }
      record.metrics[metric_id] = value;
    }
    auto bug = parse_bug_cell(row[bug_idx]);
    if (!bug) {
      result.report.issues.push_back(fmt::format(
          "row {} ({}): unparseable bug cell '{}'; treated as 0", r + 1, record.class_name,
          trim(row[bug_idx])));
      record.bug_count = 0;
    } else {
      record.bug_count = *bug;
    }
    if (result.dataset.version.empty() && version_idx) {
      std::string cell = trim(row[*version_idx]);
      if (!cell.empty()) result.dataset.version = cell;
    }
    result.dataset.records.push_back(std::move(record));
  }
  result.report.rows_loaded = result.dataset.records.size();

  if (result.dataset.records.empty()) {
    throw InputError(fmt::format("{}: no data rows", origin));
  }
  return result;
}

}  // namespace

std::vector<std::string> ColumnMapping::metric_ids() const {
  std::vector<std::string> out;
  out.reserve(metric_columns.size());
  for (const auto& [id, _] : metric_columns) out.push_back(id);
  return out;
}

const std::string* ColumnMapping::column_for(const std::string& metric_id) const {
  for (const auto& [id, column] : metric_columns) {
    if (id == metric_id) return &column;
  }
  return nullptr;
}

void ColumnMapping::set_metric_column(const std::string& metric_id, const std::string& column) {
  for (auto& [id, existing] : metric_columns) {
    if (id == metric_id) {
      existing = column;
      return;
    }
  }
  metric_columns.emplace_back(metric_id, column);
}

std::optional<double> ClassRecord::metric_value(const std::string& metric_id) const {
  auto it = metrics.find(metric_id);
  if (it == metrics.end()) return std::nullopt;
  return it->second;
}

std::string ProjectDataset::context_label() const {
  if (version.empty()) return project_name;
  if (project_name.empty()) return version;
  return project_name + " " + version;
}

LoadResult load_dataset(const std::string& path, const ColumnMapping& mapping,
                        const std::string& project_name, const std::string& version) {
  CsvTable table = read_csv_file(path);
  return build_dataset(table, mapping, project_name, version, path);
}

LoadResult load_dataset_from_string(const std::string& content, const ColumnMapping& mapping,
                                    const std::string& project_name, const std::string& version,
                                    const std::string& origin) {
  CsvTable table = parse_csv(content);
  return build_dataset(table, mapping, project_name, version, origin);
}

DatasetSummary dataset_summary(const ProjectDataset& dataset) {
  DatasetSummary summary;
  summary.class_count = dataset.records.size();
  for (const auto& record : dataset.records) {
    if (record.bug_count >= 1) ++summary.buggy_count;
  }
  summary.buggy_rate = summary.class_count == 0
                           ? 0.0
                           : static_cast<double>(summary.buggy_count) /
                                 static_cast<double>(summary.class_count);
  return summary;
}

std::string to_canonical_csv(const ProjectDataset& dataset) {
  std::string out = "name,version";
  auto ids = dataset.column_mapping.metric_ids();
  for (const auto& id : ids) {
    out.push_back(',');
    out += csv_escape(id);
  }
  out += ",bug\n";
  for (const auto& record : dataset.records) {
    out += csv_escape(record.class_name);
    out.push_back(',');
    out += csv_escape(dataset.version);
    for (const auto& id : ids) {
      out.push_back(',');
      auto value = record.metric_value(id);
      // "{}" is shortest-round-trip, so reloading reproduces the double exactly
      if (value) out += fmt::format("{}", *value);
    }
    out.push_back(',');
    out += fmt::format("{}", record.bug_count);
    out.push_back('\n');
  }
  return out;
}

}  // namespace riskexplain::data
