#include "riskexplain/assess.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::context {

const ContextualAssessment* ClassRiskProfile::assessment_for(const std::string& metric_id) const {
  for (const auto& a : assessments) {
    if (a.metric_id == metric_id) return &a;
  }
  return nullptr;
}

std::optional<double> ClassRiskProfile::max_abs_z() const {
  std::optional<double> best;
  for (const auto& a : assessments) {
    if (!a.distance.defined) continue;
    double mag = std::fabs(a.distance.z);
    if (!best || mag > *best) best = mag;
  }
  return best;
}

std::string severity_phrase(const std::string& acronym, double value,
                            const stats::SigmaDistance& distance, SeverityBand band) {
  std::string value_text = text::format_value(value);
  switch (band) {
    case SeverityBand::extreme:
      return fmt::format("{} = {} → Extreme outlier (~{}σ above the mean).", acronym,
                         value_text, text::format_z_unsigned(distance.z));
    case SeverityBand::high:
      return fmt::format("{} = {} → Far above the project norm ({}σ above the mean).", acronym,
                         value_text, text::format_z_unsigned(distance.z));
    case SeverityBand::elevated:
      return fmt::format("{} = {} → Above the project norm ({}σ above the mean).", acronym,
                         value_text, text::format_z_unsigned(distance.z));
    case SeverityBand::typical:
      return fmt::format("{} = {} → Typical for this project ({}σ from baseline).", acronym,
                         value_text, text::format_z_signed(distance.z));
    case SeverityBand::favorable:
      return fmt::format("{} = {} → Below the project norm ({}σ from baseline).", acronym,
                         value_text, text::format_z_signed(distance.z));
    case SeverityBand::no_variance:
      return fmt::format(
          "{} = {} → No variance in the project baseline (σ = 0), so the distance is undefined.",
          acronym, value_text);
  }
  return {};
}

ClassRiskProfile assess_class(const data::ClassRecord& record,
                              const stats::ProjectBaseline& baseline,
                              const SeverityThresholds& thresholds) {
  thresholds.validate();

  ClassRiskProfile profile;
  profile.class_name = record.class_name;
  profile.bug_count = record.bug_count;

  for (const auto& [metric_id, value] : record.metrics) {
    if (value && !baseline.stats_for(metric_id)) {
      throw InputError(
          fmt::format("baseline does not cover metric '{}' present on class {}", metric_id,
                      record.class_name));
    }
  }

  for (const auto& metric_id : baseline.metric_ids) {
    const auto* s = baseline.stats_for(metric_id);
    if (!s) continue;
    auto value = record.metric_value(metric_id);
    if (!value) {
      if (record.metrics.count(metric_id) > 0) profile.missing_metrics.push_back(metric_id);
      continue;
    }
    ContextualAssessment a;
    a.metric_id = metric_id;
    a.acronym = data::metric_registry().by_id(metric_id).acronym;
    a.value = *value;
    a.distance = stats::sigma_distance(*value, s->mean, s->std_dev);
    a.band = classify_severity(a.distance, thresholds);
    a.baseline_mean = s->mean;
    a.baseline_std = s->std_dev;
    a.phrase = severity_phrase(a.acronym, a.value, a.distance, a.band);
    profile.assessments.push_back(std::move(a));
  }

  SeverityBand overall = SeverityBand::no_variance;
  for (const auto& a : profile.assessments) {
    if (a.band == SeverityBand::no_variance) continue;
    if (band_rank(a.band) > band_rank(overall)) overall = a.band;
  }
  profile.overall_band = overall;
  return profile;
}

}  // namespace riskexplain::context
