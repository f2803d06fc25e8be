#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskexplain/dataset.hpp"

namespace riskexplain::stats {

struct MetricStats {
  double mean = 0.0;
  double std_dev = 0.0;  // population (divide by n); see compute_baseline
  std::size_t count = 0;  // non-missing values only
  double min = 0.0;
  double max = 0.0;
};

struct ProjectBaseline {
  std::string project_name;
  std::string version;
  std::vector<std::string> metric_ids;  // presentation order
  std::map<std::string, MetricStats> metrics;

  const MetricStats* stats_for(const std::string& metric_id) const;
  // "Apache Camel 1.6"
  std::string context_label() const;
};

struct SigmaDistance {
  double z = 0.0;
  bool defined = false;  // false when std_dev == 0; z then carries no meaning
};

// Population standard deviation by design: results are bit-reproducible and
// at corpus sizes the sample/population difference is below every tolerance
// this library promises. Missing values are excluded from mean, std_dev and
// count. Throws InputError when a requested metric has zero non-missing
// values, naming the metric.
ProjectBaseline compute_baseline(const data::ProjectDataset& dataset,
                                 const std::vector<std::string>& metric_ids = {});

// z = (value - mean) / std_dev when std_dev > 0, otherwise defined=false.
// Throws InputError on negative std_dev.
SigmaDistance sigma_distance(double value, double mean, double std_dev);

}  // namespace riskexplain::stats
