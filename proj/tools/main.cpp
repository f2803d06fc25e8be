#include <CLI11.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "riskexplain/config.hpp"
#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/pipeline.hpp"
#include "riskexplain/taxonomy.hpp"
#include "riskexplain/text.hpp"

namespace {

using nlohmann::json;
namespace rx = riskexplain;

struct Opts {
  std::string dataset;
  std::string selector;
  std::string config_file;
  std::string project_name;
  std::string project_version;
  std::string name_column;
  std::string version_column;
  std::string bug_column;
  std::vector<std::string> metric_maps;
  std::string metric_order;

  std::string backend_kind;
  std::string endpoint;
  std::string model;
  double temperature = 0.0;
  int max_retries = 3;
  double timeout_seconds = 60.0;
  int max_parallel = 4;
  double backoff_base = 1.0;
  std::string thresholds;
  std::string cache_dir;
  bool no_cache = false;
  bool reproducible = false;
  int max_regenerations = 2;

  std::string audience;
  std::string project_label;
  bool no_baseline = false;

  std::string mode;
  int top_k = 0;
  std::string out_dir;
  bool json_out = false;
  bool show_prompt = false;

  std::string explanation_path;
  std::string profile_path;

  std::map<std::string, CLI::Option*> handles;

  bool given(const std::string& name) const {
    auto it = handles.find(name);
    return it != handles.end() && it->second->count() > 0;
  }
};

void track(Opts& o, const std::string& key, CLI::Option* opt) { o.handles[key] = opt; }

void add_dataset_options(CLI::App* cmd, Opts& o) {
  cmd->add_option("dataset", o.dataset, "Class-level metrics CSV")->required();
  track(o, "config", cmd->add_option("--config", o.config_file, "Config file, key = value lines"));
  track(o, "project-name",
        cmd->add_option("--project-name", o.project_name,
                        "Project name (default: dataset file stem)"));
  track(o, "project-version",
        cmd->add_option("--project-version", o.project_version, "Version label override"));
  track(o, "name-column", cmd->add_option("--name-column", o.name_column, "Class name column"));
  track(o, "version-column",
        cmd->add_option("--version-column", o.version_column, "Version column"));
  track(o, "bug-column", cmd->add_option("--bug-column", o.bug_column, "Bug count column"));
  track(o, "map",
        cmd->add_option("--map", o.metric_maps, "Metric column mapping id=column, repeatable"));
}

void add_prompt_options(CLI::App* cmd, Opts& o) {
  track(o, "audience", cmd->add_option("--audience", o.audience, "Audience phrase, e.g. "
                                                                 "'a new contributor'"));
  track(o, "project-label",
        cmd->add_option("--project-label", o.project_label,
                        "Project phrase for the instruction sentence"));
  track(o, "no-baseline",
        cmd->add_flag("--no-baseline", o.no_baseline, "Omit baseline statistics from the prompt"));
  track(o, "metrics",
        cmd->add_option("--metrics", o.metric_order, "Comma-separated metric order override"));
}

void add_backend_options(CLI::App* cmd, Opts& o) {
  track(o, "backend", cmd->add_option("--backend", o.backend_kind, "offline or remote"));
  track(o, "endpoint",
        cmd->add_option("--endpoint", o.endpoint, "Remote chat-completions endpoint URL"));
  track(o, "model", cmd->add_option("--model", o.model, "Model name for the remote backend"));
  track(o, "temperature",
        cmd->add_option("--temperature", o.temperature, "Remote sampling temperature"));
  track(o, "max-retries",
        cmd->add_option("--max-retries", o.max_retries, "Retries after the first attempt"));
  track(o, "timeout",
        cmd->add_option("--timeout", o.timeout_seconds, "Per-request timeout in seconds"));
  track(o, "max-parallel",
        cmd->add_option("--max-parallel", o.max_parallel, "Parallel requests in batch mode"));
  track(o, "backoff-base",
        cmd->add_option("--backoff-base", o.backoff_base, "First retry delay in seconds"));
  track(o, "thresholds",
        cmd->add_option("--thresholds", o.thresholds,
                        "Severity cut points: favorable_below,elevated_at,high_at,extreme_at"));
  track(o, "cache-dir", cmd->add_option("--cache-dir", o.cache_dir, "Response cache directory"));
  track(o, "no-cache", cmd->add_flag("--no-cache", o.no_cache, "Skip the response cache"));
  track(o, "reproducible",
        cmd->add_flag("--reproducible", o.reproducible,
                      "Deterministic generation: offline backend, or temperature 0 with cache"));
  track(o, "max-regenerations",
        cmd->add_option("--max-regenerations", o.max_regenerations,
                        "Extra generations while taxonomy coverage is incomplete"));
}

rx::context::SeverityThresholds parse_thresholds(const std::string& spec) {
  auto parts = rx::text::split_list(spec);
  if (parts.size() != 4) {
    throw rx::InputError(fmt::format(
        "--thresholds expects four comma-separated numbers, got '{}'", spec));
  }
  rx::context::SeverityThresholds t;
  double* slots[] = {&t.favorable_below, &t.elevated_at, &t.high_at, &t.extreme_at};
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      std::size_t used = 0;
      *slots[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw rx::InputError(fmt::format("--thresholds: '{}' is not a number", parts[i]));
    }
  }
  t.validate();
  return t;
}

rx::config::RunConfig build_config(const Opts& o) {
  rx::config::RunConfig c;
  rx::config::apply_environment(c);
  if (o.given("config")) rx::config::apply_config_file(c, o.config_file);

  c.dataset_path = o.dataset;
  if (o.given("project-name")) c.project_name = o.project_name;
  if (o.given("project-version")) c.version_override = o.project_version;
  if (o.given("name-column")) c.mapping.name_column = o.name_column;
  if (o.given("version-column")) c.mapping.version_column = o.version_column;
  if (o.given("bug-column")) c.mapping.bug_column = o.bug_column;
  for (const auto& m : o.metric_maps) {
    auto eq = m.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= m.size()) {
      throw rx::InputError(fmt::format("--map expects id=column, got '{}'", m));
    }
    c.mapping.set_metric_column(rx::text::to_lower(m.substr(0, eq)), m.substr(eq + 1));
  }

  if (o.given("audience")) c.prompt.audience = o.audience;
  if (o.given("project-label")) c.prompt.project_label = o.project_label;
  if (o.given("no-baseline")) c.prompt.include_baseline = false;
  if (o.given("metrics")) c.prompt.metric_order = rx::text::split_list(o.metric_order);

  if (o.given("backend")) c.backend.kind = rx::config::parse_backend_kind(o.backend_kind);
  if (o.given("endpoint")) c.backend.endpoint_url = o.endpoint;
  if (o.given("model")) c.backend.model_name = o.model;
  if (o.given("temperature")) c.backend.temperature = o.temperature;
  if (o.given("max-retries")) c.backend.max_retries = o.max_retries;
  if (o.given("timeout")) c.backend.request_timeout = o.timeout_seconds;
  if (o.given("max-parallel")) c.backend.max_parallel = o.max_parallel;
  if (o.given("backoff-base")) c.backend.backoff_base_seconds = o.backoff_base;
  if (o.given("thresholds")) c.backend.thresholds = parse_thresholds(o.thresholds);
  if (o.given("cache-dir")) c.cache_dir = o.cache_dir;
  if (o.given("no-cache")) c.cache_enabled = false;
  if (o.given("reproducible")) c.reproducible = true;
  if (o.given("max-regenerations")) c.max_regenerations = o.max_regenerations;
  if (o.given("mode")) c.mode = rx::config::parse_report_mode(o.mode);
  if (o.given("out")) c.out_dir = o.out_dir;

  c.prompt.validate();
  c.backend.thresholds.validate();
  c.finalize();
  return c;
}

void print_load_issues(const rx::data::LoadReport& report) {
  constexpr std::size_t kMax = 20;
  for (std::size_t i = 0; i < report.issues.size() && i < kMax; ++i) {
    fmt::print(stderr, "note: {}\n", report.issues[i]);
  }
  if (report.issues.size() > kMax) {
    fmt::print(stderr, "note: {} further load issues suppressed\n", report.issues.size() - kMax);
  }
}

json bundle_json(const rx::prompt::PromptBundle& b) {
  return json{
      {"instruction", b.instruction},
      {"component1_context", b.component1_context},
      {"component2_metrics", b.component2_metrics},
      {"component3_requirements", b.component3_requirements},
      {"component4_format", b.component4_format},
      {"rendered", b.rendered},
  };
}

int cmd_stats(const Opts& o) {
  auto c = build_config(o);
  auto project = rx::pipeline::load_project(c);
  print_load_issues(project.load_report);
  auto summary = rx::data::dataset_summary(project.dataset);
  auto& registry = rx::data::metric_registry();

  if (o.json_out) {
    json rows = json::array();
    for (const auto& id : project.baseline.metric_ids) {
      const auto* s = project.baseline.stats_for(id);
      if (!s) continue;
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
    fmt::print("{}\n", rows.dump(2));
    return 0;
  }

  fmt::print("Project: {}\n", project.baseline.context_label());
  fmt::print("{} classes, {} ({:.1f}%) with documented bugs (rate {:.3f})\n\n",
             summary.class_count, summary.buggy_count, summary.buggy_rate * 100.0,
             summary.buggy_rate);
  fmt::print("metric, mean, std_dev, count, min, max\n");
  for (const auto& id : project.baseline.metric_ids) {
    const auto* s = project.baseline.stats_for(id);
    if (!s) continue;
    fmt::print("{}, {}, {}, {}, {}, {}\n", registry.by_id(id).acronym,
               rx::text::format_two_decimals(s->mean), rx::text::format_two_decimals(s->std_dev),
               s->count, rx::text::format_value(s->min), rx::text::format_value(s->max));
  }
  return 0;
}

int cmd_prompt(const Opts& o) {
  auto c = build_config(o);
  auto project = rx::pipeline::load_project(c);
  print_load_issues(project.load_report);
  auto selection = rx::pipeline::select_classes(project.dataset, o.selector);

  std::vector<rx::prompt::PromptBundle> bundles;
  bundles.reserve(selection.size());
  for (auto idx : selection) {
    bundles.push_back(
        rx::prompt::compose_prompt(project.dataset.records[idx], project.baseline, c.prompt));
  }

  if (o.json_out) {
    if (bundles.size() == 1) {
      fmt::print("{}\n", bundle_json(bundles.front()).dump(2));
    } else {
      json arr = json::array();
      for (const auto& b : bundles) arr.push_back(bundle_json(b));
      fmt::print("{}\n", arr.dump(2));
    }
    return 0;
  }
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (i > 0) fmt::print("\n---\n\n");
    fmt::print("{}\n", bundles[i].rendered);
  }
  return 0;
}

int cmd_explain(const Opts& o) {
  auto c = build_config(o);
  c.mode = rx::report::ReportMode::explained;
  auto project = rx::pipeline::load_project(c);
  print_load_issues(project.load_report);
  auto selection = rx::pipeline::select_classes(project.dataset, o.selector);

  // Prompts keyed by fingerprint so --show-prompt survives report reordering.
  std::map<std::string, rx::prompt::PromptBundle> prompts;
  if (o.show_prompt) {
    for (auto idx : selection) {
      auto b = rx::prompt::compose_prompt(project.dataset.records[idx], project.baseline,
                                          c.prompt);
      auto fp = rx::backend::prompt_fingerprint(b.rendered);
      prompts.emplace(std::move(fp), std::move(b));
    }
  }

  auto batch = rx::pipeline::run_batch(project, selection, c);
  if (batch.reports.empty() && batch.failures.size() == 1) {
    throw rx::BackendError(batch.failures.front().error);
  }
  for (const auto& f : batch.failures) {
    fmt::print(stderr, "error: {}: {}\n", f.class_name, f.error);
  }
  if (batch.reports.empty()) {
    throw rx::BackendError(batch.failures.empty()
                               ? std::string("no explanations produced")
                               : fmt::format("all {} selected classes failed",
                                             batch.failures.size()));
  }
  rx::report::order_reports(batch.reports);

  auto prompt_for = [&](const rx::report::ClassReport& r) -> const rx::prompt::PromptBundle* {
    if (!o.show_prompt || !r.explanation) return nullptr;
    auto it = prompts.find(r.explanation->prompt_fingerprint);
    return it == prompts.end() ? nullptr : &it->second;
  };

  if (o.json_out) {
    auto to_json = [&](const rx::report::ClassReport& r) {
      json doc = rx::report::class_report_json(r, c.mode);
      if (const auto* b = prompt_for(r)) doc["prompt"] = bundle_json(*b);
      return doc;
    };
    if (batch.reports.size() == 1) {
      fmt::print("{}\n", to_json(batch.reports.front()).dump(2));
    } else {
      json arr = json::array();
      for (const auto& r : batch.reports) arr.push_back(to_json(r));
      fmt::print("{}\n", arr.dump(2));
    }
  } else {
    for (std::size_t i = 0; i < batch.reports.size(); ++i) {
      if (i > 0) fmt::print("\n");
      if (const auto* b = prompt_for(batch.reports[i])) fmt::print("{}\n\n", b->rendered);
      fmt::print("{}", rx::report::render_class_report_md(batch.reports[i], c.mode,
                                                          project.baseline.context_label()));
    }
  }
  return 0;
}

int cmd_batch(const Opts& o) {
  auto c = build_config(o);
  auto project = rx::pipeline::load_project(c);
  print_load_issues(project.load_report);

  std::vector<std::size_t> selection;
  if (o.given("class")) {
    selection = rx::pipeline::select_classes(project.dataset, o.selector);
  } else {
    selection.resize(project.dataset.records.size());
    for (std::size_t i = 0; i < selection.size(); ++i) selection[i] = i;
  }

  if (o.given("top-k")) {
    if (o.top_k < 1) throw rx::InputError("--top-k must be at least 1");
    auto profiles = rx::pipeline::profile_all(project, c.backend.thresholds);
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
    if (selection.size() > static_cast<std::size_t>(o.top_k)) selection.resize(o.top_k);
  }

  fmt::print(stderr, "processing {} classes in {} mode\n", selection.size(),
             rx::report::mode_name(c.mode));

  auto batch = rx::pipeline::run_batch(project, selection, c);
  auto written = rx::pipeline::write_reports(project, batch, c);
  for (const auto& f : batch.failures) {
    fmt::print(stderr, "error: {}: {}\n", f.class_name, f.error);
  }

  bool explained_mode = c.mode == rx::report::ReportMode::explained;
  if (o.json_out) {
    json doc{
        {"project", project.dataset.project_name},
        {"mode", rx::report::mode_name(c.mode)},
        {"selected", selection.size()},
        {"reported", batch.reports.size()},
        {"outputs", {{"markdown", written.markdown_path}, {"json", written.json_path}}},
    };
    if (explained_mode) {
      doc["explained"] = batch.explained;
      doc["complete"] = batch.complete;
      doc["complete_coverage"] = batch.complete_coverage;
    }
    if (!batch.failures.empty()) {
      json failures = json::array();
      for (const auto& f : batch.failures) {
        failures.push_back(json{{"class_name", f.class_name}, {"error", f.error}});
      }
      doc["failures"] = std::move(failures);
    }
    fmt::print("{}\n", doc.dump(2));
  } else {
    fmt::print("Project: {}\n", project.baseline.context_label());
    fmt::print("Classes: {} selected, {} reported\n", selection.size(), batch.reports.size());
    if (explained_mode) fmt::print("Coverage: {}/{} complete\n", batch.complete, batch.explained);
    if (!batch.failures.empty()) fmt::print("Failures: {}\n", batch.failures.size());
    fmt::print("Report: {}\n", written.markdown_path);
    fmt::print("JSON: {}\n", written.json_path);
  }

  if (explained_mode && batch.explained == 0 && !selection.empty()) return 4;
  return 0;
}

int cmd_validate(const Opts& o) {
  rx::config::RunConfig c;
  rx::config::apply_environment(c);
  if (o.given("config")) rx::config::apply_config_file(c, o.config_file);

  std::string explanation;
  if (o.explanation_path.empty() || o.explanation_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    explanation = ss.str();
  } else {
    std::ifstream in(o.explanation_path, std::ios::binary);
    if (!in) {
      throw rx::InputError(fmt::format("cannot read explanation file: {}", o.explanation_path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    explanation = ss.str();
  }

  std::ifstream pin(o.profile_path);
  if (!pin) throw rx::InputError(fmt::format("cannot read profile file: {}", o.profile_path));
  rx::context::ClassRiskProfile profile;
  try {
    profile = rx::report::profile_from_json(json::parse(pin));
  } catch (const json::exception& e) {
    throw rx::InputError(fmt::format("profile JSON: {}", e.what()));
  }

  auto coverage = rx::taxonomy::validate(explanation, profile, c.cues);
  if (o.json_out) {
    fmt::print("{}\n", rx::report::coverage_json(coverage).dump(2));
    return 0;
  }
  auto line = [&](const char* name, bool hit, const char* key) {
    std::size_t spans = 0;
    if (auto it = coverage.evidence.find(key); it != coverage.evidence.end()) {
      spans = it->second.size();
    }
    if (hit) {
      fmt::print("{}: yes ({} evidence span{})\n", name, spans, spans == 1 ? "" : "s");
    } else {
      fmt::print("{}: no\n", name);
    }
  };
  line("descriptive", coverage.has_descriptive, "descriptive");
  line("contextual", coverage.has_contextual, "contextual");
  line("actionable", coverage.has_actionable, "actionable");
  fmt::print("complete: {}\n", coverage.complete ? "yes" : "no");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Per-project metric baselines, severity bands, and generated explanations "
               "for class-level defect datasets"};
  app.set_version_flag("--version", "riskexplain 0.1.0");
  app.require_subcommand(1);

  Opts stats_o, prompt_o, explain_o, batch_o, validate_o;

  auto* stats_cmd = app.add_subcommand("stats", "Print per-metric baseline statistics");
  add_dataset_options(stats_cmd, stats_o);
  stats_cmd->add_flag("--json", stats_o.json_out, "Emit JSON rows to standard output");

  auto* prompt_cmd = app.add_subcommand("prompt", "Print the generation prompt for a class");
  add_dataset_options(prompt_cmd, prompt_o);
  prompt_cmd->add_option("--class", prompt_o.selector, "Class name substring or glob")
      ->required();
  add_prompt_options(prompt_cmd, prompt_o);
  prompt_cmd->add_flag("--json", prompt_o.json_out,
                       "Emit the prompt components as a JSON document");

  auto* explain_cmd =
      app.add_subcommand("explain", "Generate and validate an explanation for a class");
  add_dataset_options(explain_cmd, explain_o);
  explain_cmd->add_option("--class", explain_o.selector, "Class name substring or glob")
      ->required();
  add_prompt_options(explain_cmd, explain_o);
  add_backend_options(explain_cmd, explain_o);
  explain_cmd->add_flag("--show-prompt", explain_o.show_prompt,
                        "Print the rendered prompt before the report");
  explain_cmd->add_flag("--json", explain_o.json_out, "Emit the class report as JSON");

  auto* batch_cmd = app.add_subcommand("batch", "Write the full project report");
  add_dataset_options(batch_cmd, batch_o);
  track(batch_o, "class",
        batch_cmd->add_option("--class", batch_o.selector,
                              "Restrict to classes matching a substring or glob"));
  track(batch_o, "top-k",
        batch_cmd->add_option("--top-k", batch_o.top_k,
                              "Keep only the k most severe classes by overall band"));
  track(batch_o, "mode",
        batch_cmd->add_option("--mode", batch_o.mode, "metrics_only or explained"));
  track(batch_o, "out",
        batch_cmd->add_option("--out", batch_o.out_dir, "Output directory for report files"));
  add_prompt_options(batch_cmd, batch_o);
  add_backend_options(batch_cmd, batch_o);
  batch_cmd->add_flag("--json", batch_o.json_out, "Emit a run summary as JSON");

  auto* validate_cmd =
      app.add_subcommand("validate", "Check explanation text against the coverage taxonomy");
  validate_cmd->add_option("explanation", validate_o.explanation_path,
                           "Explanation text file; '-' or absent reads standard input");
  validate_cmd->add_option("--profile", validate_o.profile_path, "Class profile JSON file")
      ->required();
  track(validate_o, "config",
        validate_cmd->add_option("--config", validate_o.config_file,
                                 "Config file, key = value lines"));
  validate_cmd->add_flag("--json", validate_o.json_out, "Emit the coverage result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help and version exit 0; anything else is an input problem.
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(stats_cmd)) return cmd_stats(stats_o);
    if (app.got_subcommand(prompt_cmd)) return cmd_prompt(prompt_o);
    if (app.got_subcommand(explain_cmd)) return cmd_explain(explain_o);
    if (app.got_subcommand(batch_cmd)) return cmd_batch(batch_o);
    if (app.got_subcommand(validate_cmd)) return cmd_validate(validate_o);
  } catch (const rx::BackendError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 4;
  } catch (const rx::SelectionError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 3;
  } catch (const rx::InputError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
