#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "riskexplain/assess.hpp"
#include "riskexplain/backend.hpp"
#include "riskexplain/config.hpp"
#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/pipeline.hpp"
#include "riskexplain/prompt.hpp"
#include "riskexplain/report.hpp"
#include "riskexplain/severity.hpp"
#include "riskexplain/stats.hpp"
#include "riskexplain/taxonomy.hpp"

namespace py = pybind11;
namespace rx = riskexplain;
using nlohmann::json;

namespace {

rx::config::RunConfig offline_config(const std::string& dataset_path,
                                     const std::string& project_name) {
  rx::config::RunConfig c;
  c.dataset_path = dataset_path;
  c.project_name = project_name;
  c.backend.kind = rx::backend::BackendKind::offline;
  c.cache_enabled = false;
  return c;
}

// First match in record order; select_classes already throws when nothing
// matches, so callers always get a record.
std::size_t first_match(const rx::data::ProjectDataset& dataset, const std::string& pattern) {
  return rx::pipeline::select_classes(dataset, pattern).front();
}

std::string stats_json(const std::string& dataset_path, const std::string& project_name) {
  auto project = rx::pipeline::load_project(offline_config(dataset_path, project_name));
  auto& registry = rx::data::metric_registry();
  json rows = json::array();
  for (const auto& id : project.baseline.metric_ids) {
    const auto* s = project.baseline.stats_for(id);
    if (s == nullptr) continue;
    rows.push_back(json{
        {"project", project.dataset.project_name},
        {"metric", id},
        {"acronym", registry.by_id(id).acronym},
        {"mean", s->mean},
        {"std_dev", s->std_dev},
        {"count", s->count},
        {"min", s->min},
        {"max", s->max},
    });
  }
  return rows.dump();
}

std::string prompt_text(const std::string& dataset_path, const std::string& class_pattern,
                        const std::string& project_name, const std::string& project_label,
                        bool include_baseline) {
  auto config = offline_config(dataset_path, project_name);
  config.prompt.project_label = project_label;
  config.prompt.include_baseline = include_baseline;
  auto project = rx::pipeline::load_project(config);
  auto idx = first_match(project.dataset, class_pattern);
  return rx::prompt::compose_prompt(project.dataset.records[idx], project.baseline, config.prompt)
      .rendered;
}

std::string explain_json(const std::string& dataset_path, const std::string& class_pattern,
                         const std::string& project_name, bool metrics_only) {
  auto config = offline_config(dataset_path, project_name);
  config.mode = metrics_only ? rx::report::ReportMode::metrics_only
                             : rx::report::ReportMode::explained;
  auto project = rx::pipeline::load_project(config);
  std::vector<std::size_t> selection{first_match(project.dataset, class_pattern)};
  auto batch = rx::pipeline::run_batch(project, selection, config);
  if (batch.reports.empty()) {
    throw rx::BackendError(batch.failures.empty() ? "no report produced"
                                                  : batch.failures.front().error);
  }
  return rx::report::class_report_json(batch.reports.front(), config.mode).dump();
}

std::string batch_json(const std::string& dataset_path, const std::string& project_name,
                       const std::string& mode, const std::string& class_pattern, int top_k) {
  auto config = offline_config(dataset_path, project_name);
  config.mode = rx::config::parse_report_mode(mode);
  auto project = rx::pipeline::load_project(config);

  std::vector<std::size_t> selection;
  if (class_pattern.empty()) {
    selection.resize(project.dataset.records.size());
    for (std::size_t i = 0; i < selection.size(); ++i) selection[i] = i;
  } else {
    selection = rx::pipeline::select_classes(project.dataset, class_pattern);
  }
  if (top_k > 0) {
    auto profiles = rx::pipeline::profile_all(project, config.backend.thresholds);
    std::stable_sort(selection.begin(), selection.end(), [&](std::size_t a, std::size_t b) {
      const auto& pa = profiles[a];
      const auto& pb = profiles[b];
      int ra = rx::context::band_rank(pa.overall_band);
      int rb = rx::context::band_rank(pb.overall_band);
      if (ra != rb) return ra > rb;
      double za = pa.max_abs_z().value_or(-1.0);
      double zb = pb.max_abs_z().value_or(-1.0);
      if (za != zb) return za > zb;
      return pa.class_name < pb.class_name;
    });
    if (selection.size() > static_cast<std::size_t>(top_k)) selection.resize(top_k);
  }

  auto batch = rx::pipeline::run_batch(project, selection, config);
  rx::report::order_reports(batch.reports);
  return rx::report::project_report_json(project.dataset, project.baseline, batch.reports,
                                         config.mode, batch.failures)
      .dump();
}

std::string validate_text(const std::string& explanation_text, const std::string& profile_json) {
  json doc;
  try {
    doc = json::parse(profile_json);
  } catch (const json::exception& e) {
    throw rx::InputError(std::string("profile JSON: ") + e.what());
  }
  auto profile = rx::report::profile_from_json(doc);
  auto coverage = rx::taxonomy::validate(explanation_text, profile);
  json evidence = json::object();
  for (const auto& [category, spans] : coverage.evidence) {
    json items = json::array();
    for (const auto& span : spans) {
      items.push_back(json{{"offset", span.offset}, {"length", span.length},
                           {"excerpt", span.excerpt}});
    }
    evidence[category] = std::move(items);
  }
  return json{{"descriptive", coverage.has_descriptive},
              {"contextual", coverage.has_contextual},
              {"actionable", coverage.has_actionable},
              {"complete", coverage.complete},
              {"evidence", std::move(evidence)}}
      .dump();
}

std::optional<double> sigma_distance(double value, double mean, double std_dev) {
  auto d = rx::stats::sigma_distance(value, mean, std_dev);
  if (!d.defined) return std::nullopt;
  return d.z;
}

std::string classify_severity(std::optional<double> z, double favorable_below, double elevated_at,
                              double high_at, double extreme_at) {
  rx::context::SeverityThresholds thresholds{favorable_below, elevated_at, high_at, extreme_at};
  thresholds.validate();
  rx::stats::SigmaDistance d;
  if (z.has_value()) {
    d.z = *z;
    d.defined = true;
  }
  return rx::context::band_name(rx::context::classify_severity(d, thresholds));
}

}  // namespace

PYBIND11_MODULE(_riskexplain, m) {
  m.doc() = "Class-level defect risk baselines, severity bands, and explanation tooling";

  py::register_exception<rx::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<rx::SelectionError>(m, "SelectionError", PyExc_LookupError);
  py::register_exception<rx::BackendError>(m, "BackendError", PyExc_RuntimeError);

  m.def("version", [] { return std::string("0.1.0"); });

  m.def("sigma_distance", &sigma_distance, py::arg("value"), py::arg("mean"), py::arg("std_dev"),
        "Standard-deviation distance (value - mean) / std_dev, or None when std_dev is 0.");

  m.def("classify_severity", &classify_severity, py::arg("z"),
        py::arg("favorable_below") = -0.25, py::arg("elevated_at") = 1.0,
        py::arg("high_at") = 2.0, py::arg("extreme_at") = 4.0,
        "Severity band name for a z value; pass None for an undefined distance.");

  m.def("stats_json", &stats_json, py::arg("dataset_path"), py::arg("project_name") = "",
        "Baseline statistics rows as a JSON array string.");

  m.def("prompt_text", &prompt_text, py::arg("dataset_path"), py::arg("class_pattern"),
        py::arg("project_name") = "", py::arg("project_label") = "",
        py::arg("include_baseline") = true,
        "Rendered explanation prompt for the first class matching the pattern.");

  m.def("explain_json", &explain_json, py::arg("dataset_path"), py::arg("class_pattern"),
        py::arg("project_name") = "", py::arg("metrics_only") = false,
        "Class report JSON string for the first match, generated offline.");

  m.def("batch_json", &batch_json, py::arg("dataset_path"), py::arg("project_name") = "",
        py::arg("mode") = "explained", py::arg("class_pattern") = "", py::arg("top_k") = 0,
        "Project report JSON string over the selected classes, generated offline.");

  m.def("validate_text", &validate_text, py::arg("explanation_text"), py::arg("profile_json"),
        "Taxonomy coverage of an explanation against a class profile, as a JSON string.");
}
