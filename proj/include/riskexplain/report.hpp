#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "riskexplain/assess.hpp"
#include "riskexplain/backend.hpp"
#include "riskexplain/dataset.hpp"
#include "riskexplain/taxonomy.hpp"

namespace riskexplain::report {

// metrics_only renders raw values and baseline statistics, nothing generated:
// no explanation text, no severity phrases, no suggestions.
enum class ReportMode { metrics_only, explained };

std::string mode_name(ReportMode mode);

struct ClassReport {
  context::ClassRiskProfile profile;
  std::optional<backend::Explanation> explanation;  // explained mode only
  std::optional<taxonomy::TaxonomyCoverage> coverage;
};

struct GenerationFailure {
  std::string class_name;
  std::string error;
};

// Markdown class section. `heading_level` is the title depth (1 standalone,
// 2 inside a project report). Explained mode appends the explanation body,
// a coverage footer, and the backend/fingerprint line; timestamps never
// appear, so identical inputs render byte-identically.
std::string render_class_report_md(const ClassReport& report, ReportMode mode,
                                   const std::string& project_label, int heading_level = 1);

// JSON mirror with stable keys and full-precision numbers. Severity phrases
// ride along only in explained mode; metrics_only carries figures only.
nlohmann::json class_report_json(const ClassReport& report, ReportMode mode);

// Project document: summary header, baseline table, then class sections
// ordered by overall band descending, |max z| descending, name ascending.
std::string render_project_report_md(const data::ProjectDataset& dataset,
                                     const stats::ProjectBaseline& baseline,
                                     const std::vector<ClassReport>& reports, ReportMode mode,
                                     const std::vector<GenerationFailure>& failures = {});

nlohmann::json project_report_json(const data::ProjectDataset& dataset,
                                   const stats::ProjectBaseline& baseline,
                                   const std::vector<ClassReport>& reports, ReportMode mode,
                                   const std::vector<GenerationFailure>& failures = {});

// Stable order shared by both formats; sorts in place.
void order_reports(std::vector<ClassReport>& reports);

nlohmann::json baseline_json(const stats::ProjectBaseline& baseline);
nlohmann::json summary_json(const data::DatasetSummary& summary);
nlohmann::json coverage_json(const taxonomy::TaxonomyCoverage& coverage);

// Rebuilds a profile from the JSON shape class_report_json emits (a bare
// profile document with the same keys also works). Assessments need at least
// a "metric" id; everything else falls back to sensible defaults. Throws
// InputError on structural problems.
context::ClassRiskProfile profile_from_json(const nlohmann::json& doc);

}  // namespace riskexplain::report
