#include "riskexplain/stats.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "riskexplain/errors.hpp"

namespace riskexplain::stats {

const MetricStats* ProjectBaseline::stats_for(const std::string& metric_id) const {
  auto it = metrics.find(metric_id);
  if (it == metrics.end()) return nullptr;
  return &it->second;
}

std::string ProjectBaseline::context_label() const {
  if (version.empty()) return project_name;
  if (project_name.empty()) return version;
  return project_name + " " + version;
}

ProjectBaseline compute_baseline(const data::ProjectDataset& dataset,
                                 const std::vector<std::string>& metric_ids) {
  if (dataset.records.empty()) throw InputError("cannot compute baseline of an empty dataset");

  ProjectBaseline baseline;
  baseline.project_name = dataset.project_name;
  baseline.version = dataset.version;
  baseline.metric_ids =
      metric_ids.empty() ? dataset.column_mapping.metric_ids() : metric_ids;

  for (const auto& metric_id : baseline.metric_ids) {
    std::vector<double> values;
    values.reserve(dataset.records.size());
    for (const auto& record : dataset.records) {
      auto value = record.metric_value(metric_id);
      if (value) values.push_back(*value);
    }
    if (values.empty()) {
      throw InputError(
          fmt::format("metric '{}' has no parseable values in this dataset", metric_id));
    }
    MetricStats s;
    s.count = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
      double d = v - s.mean;
      sq += d * d;
    }
    s.std_dev = std::sqrt(sq / static_cast<double>(values.size()));
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    s.min = *mn;
    s.max = *mx;
    baseline.metrics[metric_id] = s;
  }
  return baseline;
}

SigmaDistance sigma_distance(double value, double mean, double std_dev) {
  if (std_dev < 0.0 || !std::isfinite(std_dev)) {
    throw InputError(fmt::format("std_dev must be finite and >= 0, got {}", std_dev));
  }
  SigmaDistance d;
  if (std_dev == 0.0) {
    d.defined = false;
    d.z = 0.0;
    return d;
  }
  d.defined = true;
  d.z = (value - mean) / std_dev;
  return d;
}

}  // namespace riskexplain::stats
