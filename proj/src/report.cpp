#include "riskexplain/report.hpp"

#include <fmt/core.h>

#include <algorithm>

#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::report {

namespace {

using context::SeverityBand;
using nlohmann::json;

std::string heading(int level, const std::string& title) {
  return std::string(static_cast<std::size_t>(level), '#') + " " + title;
}

std::string z_cell(const stats::SigmaDistance& d) {
  return d.defined ? text::format_z_signed(d.z) : "n/a";
}

std::string bugs_line(const context::ClassRiskProfile& profile) {
  if (profile.bug_count >= 1 && profile.bug_rank && profile.class_total > 0) {
    return fmt::format("Documented bugs: {} (rank {} of {} by bug count)", profile.bug_count,
                       *profile.bug_rank, profile.class_total);
  }
  return fmt::format("Documented bugs: {}", profile.bug_count);
}

std::string metrics_table(const context::ClassRiskProfile& profile) {
  std::string out = "| Metric | Value | Mean | Std dev | z | Band |\n"
                    "| --- | --- | --- | --- | --- | --- |\n";
  for (const auto& a : profile.assessments) {
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", a.acronym,
                       text::format_value(a.value), text::format_two_decimals(a.baseline_mean),
                       text::format_two_decimals(a.baseline_std), z_cell(a.distance),
                       context::band_name(a.band));
  }
  return out;
}

std::string coverage_line(const taxonomy::TaxonomyCoverage& c) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return fmt::format("Coverage: descriptive {}, contextual {}, actionable {} ({})",
                     yn(c.has_descriptive), yn(c.has_contextual), yn(c.has_actionable),
                     c.complete ? "complete" : "incomplete");
}

bool report_order_less(const ClassReport& lhs, const ClassReport& rhs) {
  int lr = context::band_rank(lhs.profile.overall_band);
  int rr = context::band_rank(rhs.profile.overall_band);
  if (lr != rr) return lr > rr;
  double lz = lhs.profile.max_abs_z().value_or(-1.0);
  double rz = rhs.profile.max_abs_z().value_or(-1.0);
  if (lz != rz) return lz > rz;
  if (lhs.profile.class_name != rhs.profile.class_name) {
    return lhs.profile.class_name < rhs.profile.class_name;
  }
  return false;
}

}  // namespace

std::string mode_name(ReportMode mode) {
  return mode == ReportMode::metrics_only ? "metrics_only" : "explained";
}

void order_reports(std::vector<ClassReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), report_order_less);
}

std::string render_class_report_md(const ClassReport& report, ReportMode mode,
                                   const std::string& project_label, int heading_level) {
  const auto& profile = report.profile;
  std::string title = project_label.empty()
                          ? fmt::format("Class report: {}", profile.class_name)
                          : fmt::format("Class report: {} ({})", profile.class_name,
                                        project_label);
  std::string out = heading(heading_level, title) + "\n\n";
  out += bugs_line(profile) + "\n\n";
  out += metrics_table(profile);
  if (!profile.missing_metrics.empty()) {
    std::string joined;
    for (const auto& id : profile.missing_metrics) {
      if (!joined.empty()) joined += ", ";
      joined += id;
    }
    out += fmt::format("\nNot available: {}\n", joined);
  }
  out += fmt::format("\nOverall band: {}\n", context::band_name(profile.overall_band));

  if (mode == ReportMode::explained && report.explanation) {
    out += "\n" + heading(heading_level + 1, "Explanation") + "\n\n";
    out += report.explanation->text;
    if (!report.explanation->text.empty() && report.explanation->text.back() != '\n') {
      out += "\n";
    }
    out += "\n";
    if (report.coverage) out += coverage_line(*report.coverage) + "\n";
    out += fmt::format("Backend: {}, prompt fingerprint: {}\n",
                       report.explanation->backend_id, report.explanation->prompt_fingerprint);
  }
  return out;
}

json class_report_json(const ClassReport& report, ReportMode mode) {
  const auto& profile = report.profile;
  json assessments = json::array();
  for (const auto& a : profile.assessments) {
    json entry = {
        {"metric", a.metric_id},
        {"acronym", a.acronym},
        {"value", a.value},
        {"mean", a.baseline_mean},
        {"std_dev", a.baseline_std},
        {"z_defined", a.distance.defined},
        {"band", context::band_name(a.band)},
    };
    if (a.distance.defined) entry["z"] = a.distance.z;
    if (mode == ReportMode::explained) entry["phrase"] = a.phrase;
    assessments.push_back(std::move(entry));
  }

  json out = {
      {"class_name", profile.class_name},
      {"bug_count", profile.bug_count},
      {"overall_band", context::band_name(profile.overall_band)},
      {"assessments", std::move(assessments)},
  };
  if (profile.bug_rank) {
    out["bug_rank"] = *profile.bug_rank;
    out["class_total"] = profile.class_total;
  }
  if (!profile.missing_metrics.empty()) out["missing"] = profile.missing_metrics;
  if (mode == ReportMode::explained && report.explanation) {
    out["explanation"] = {
        {"text", report.explanation->text},
        {"backend_id", report.explanation->backend_id},
        {"prompt_fingerprint", report.explanation->prompt_fingerprint},
        {"attempt_count", report.explanation->attempt_count},
    };
    if (report.coverage) out["coverage"] = coverage_json(*report.coverage);
  }
  return out;
}

json coverage_json(const taxonomy::TaxonomyCoverage& coverage) {
  json evidence = json::object();
  for (const auto& [category, spans] : coverage.evidence) {
    json list = json::array();
    for (const auto& span : spans) {
      list.push_back({
          {"offset", span.offset},
          {"length", span.length},
          {"excerpt", span.excerpt},
      });
    }
    evidence[category] = std::move(list);
  }
  return json{
      {"descriptive", coverage.has_descriptive},
      {"contextual", coverage.has_contextual},
      {"actionable", coverage.has_actionable},
      {"complete", coverage.complete},
      {"evidence", std::move(evidence)},
  };
}

json baseline_json(const stats::ProjectBaseline& baseline) {
  json metrics = json::array();
  auto& registry = data::metric_registry();
  for (const auto& id : baseline.metric_ids) {
    const auto* s = baseline.stats_for(id);
    if (!s) continue;
    metrics.push_back({
        {"metric", id},
        {"acronym", registry.by_id(id).acronym},
        {"mean", s->mean},
        {"std_dev", s->std_dev},
        {"count", s->count},
        {"min", s->min},
        {"max", s->max},
    });
  }
  return json{
      {"project", baseline.project_name},
      {"version", baseline.version},
      {"metrics", std::move(metrics)},
  };
}

json summary_json(const data::DatasetSummary& summary) {
  return json{
      {"class_count", summary.class_count},
      {"buggy_count", summary.buggy_count},
      {"buggy_rate", summary.buggy_rate},
  };
}

std::string render_project_report_md(const data::ProjectDataset& dataset,
                                     const stats::ProjectBaseline& baseline,
                                     const std::vector<ClassReport>& reports, ReportMode mode,
                                     const std::vector<GenerationFailure>& failures) {
  auto summary = data::dataset_summary(dataset);
  std::string out = heading(1, fmt::format("Project report: {}", baseline.context_label()));
  out += "\n\n";
  out += fmt::format("{} classes, {} ({:.1f}%) with documented bugs.\n\n", summary.class_count,
                     summary.buggy_count, summary.buggy_rate * 100.0);

  out += "| Metric | Mean | Std dev | Min | Max | Count |\n"
         "| --- | --- | --- | --- | --- | --- |\n";
  auto& registry = data::metric_registry();
  for (const auto& id : baseline.metric_ids) {
    const auto* s = baseline.stats_for(id);
    if (!s) continue;
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", registry.by_id(id).acronym,
                       text::format_two_decimals(s->mean), text::format_two_decimals(s->std_dev),
                       text::format_value(s->min), text::format_value(s->max), s->count);
  }

  for (const auto& report : reports) {
    out += "\n" + render_class_report_md(report, mode, "", 2);
  }

  if (!failures.empty()) {
    out += "\n" + heading(2, fmt::format("Failures ({})", failures.size())) + "\n\n";
    for (const auto& failure : failures) {
      out += fmt::format("- {}: {}\n", failure.class_name, failure.error);
    }
  }
  return out;
}

json project_report_json(const data::ProjectDataset& dataset,
                         const stats::ProjectBaseline& baseline,
                         const std::vector<ClassReport>& reports, ReportMode mode,
                         const std::vector<GenerationFailure>& failures) {
  json classes = json::array();
  for (const auto& report : reports) {
    classes.push_back(class_report_json(report, mode));
  }
  json out = {
      {"project", baseline.context_label()},
      {"mode", mode_name(mode)},
      {"summary", summary_json(data::dataset_summary(dataset))},
      {"baseline", baseline_json(baseline)},
      {"classes", std::move(classes)},
  };
  if (!failures.empty()) {
    json list = json::array();
    for (const auto& failure : failures) {
      list.push_back({{"class_name", failure.class_name}, {"error", failure.error}});
    }
    out["failures"] = std::move(list);
  }
  return out;
}

context::ClassRiskProfile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("profile JSON must be an object");
  context::ClassRiskProfile profile;
  profile.class_name = doc.value("class_name", std::string{});
  profile.bug_count = doc.value("bug_count", 0L);
  if (doc.contains("bug_rank")) profile.bug_rank = doc["bug_rank"].get<std::size_t>();
  profile.class_total = doc.value("class_total", std::size_t{0});
  if (doc.contains("missing")) {
    profile.missing_metrics = doc["missing"].get<std::vector<std::string>>();
  }

  auto& registry = data::metric_registry();
  if (doc.contains("assessments")) {
    if (!doc["assessments"].is_array()) throw InputError("profile 'assessments' must be an array");
    for (const auto& entry : doc["assessments"]) {
      if (!entry.is_object() || !entry.contains("metric")) {
        throw InputError("each assessment needs a 'metric' id");
      }
      context::ContextualAssessment a;
      a.metric_id = entry["metric"].get<std::string>();
      a.acronym = entry.value("acronym", registry.by_id(a.metric_id).acronym);
      a.value = entry.value("value", 0.0);
      a.baseline_mean = entry.value("mean", 0.0);
      a.baseline_std = entry.value("std_dev", 0.0);
      a.distance.z = entry.value("z", 0.0);
      a.distance.defined = entry.value("z_defined", entry.contains("z"));
      a.band = entry.contains("band")
                   ? context::band_from_name(entry["band"].get<std::string>())
                   : context::classify_severity(a.distance);
      a.phrase = entry.value("phrase", std::string{});
      profile.assessments.push_back(std::move(a));
    }
  }

  if (doc.contains("overall_band")) {
    profile.overall_band = context::band_from_name(doc["overall_band"].get<std::string>());
  } else {
    profile.overall_band = context::SeverityBand::no_variance;
    for (const auto& a : profile.assessments) {
      if (context::band_rank(a.band) > context::band_rank(profile.overall_band)) {
        profile.overall_band = a.band;
      }
    }
  }
  return profile;
}

}  // namespace riskexplain::report
