#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskexplain/severity.hpp"
#include "riskexplain/stats.hpp"

namespace riskexplain::context {

struct ContextualAssessment {
  std::string metric_id;
  std::string acronym;
  double value = 0.0;
  stats::SigmaDistance distance;
  SeverityBand band = SeverityBand::typical;
  double baseline_mean = 0.0;
  double baseline_std = 0.0;
  std::string phrase;  // one sentence: metric, value, and (when defined) z
};

struct ClassRiskProfile {
  std::string class_name;
  long bug_count = 0;
  // 1-based competition rank by bug_count, filled by the pipeline when the
  // whole dataset is in view; bands never depend on it.
  std::optional<std::size_t> bug_rank;
  std::size_t class_total = 0;  // dataset size behind bug_rank; 0 = unknown
  std::vector<ContextualAssessment> assessments;
  std::vector<std::string> missing_metrics;  // baseline-covered but unparseable
  SeverityBand overall_band = SeverityBand::no_variance;

  const ContextualAssessment* assessment_for(const std::string& metric_id) const;
  // Largest |z| over defined assessments; nullopt when none are defined.
  std::optional<double> max_abs_z() const;
};

// Renders the band's interpretation sentence, e.g.
//   "CBO = 448 → Extreme outlier (~19.4σ above the mean)."
std::string severity_phrase(const std::string& acronym, double value,
                            const stats::SigmaDistance& distance, SeverityBand band);

// One assessment per metric the baseline covers and the record parsed;
// metrics the baseline covers but the record is missing land in
// missing_metrics. A parsed metric absent from the baseline throws
// InputError naming it. overall_band is the maximum band over assessments,
// ignoring no-variance; if nothing else exists it stays no-variance.
ClassRiskProfile assess_class(const data::ClassRecord& record,
                              const stats::ProjectBaseline& baseline,
                              const SeverityThresholds& thresholds = {});

}  // namespace riskexplain::context
