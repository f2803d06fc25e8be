#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riskexplain/backend.hpp"
#include "riskexplain/config.hpp"
#include "riskexplain/report.hpp"

namespace riskexplain::pipeline {

struct LoadedProject {
  data::ProjectDataset dataset;
  data::LoadReport load_report;
  stats::ProjectBaseline baseline;
};

// Loads the dataset named by the config and computes its baseline. An empty
// config.project_name falls back to the dataset file stem ("camel16" for
// data/camel16.csv).
LoadedProject load_project(const config::RunConfig& config);

// One profile per record, in record order, with competition bug ranks
// (1 + number of classes with strictly more documented bugs) filled in for
// classes that have at least one bug.
std::vector<context::ClassRiskProfile> profile_all(const LoadedProject& project,
                                                   const context::SeverityThresholds& thresholds);

// Record indices whose class name matches: glob when the pattern contains
// '*' or '?', case-insensitive substring otherwise. An empty pattern selects
// every record. Throws SelectionError when nothing matches.
std::vector<std::size_t> select_classes(const data::ProjectDataset& dataset,
                                        const std::string& pattern);

// Composes the prompt, generates through the backend with taxonomy-driven
// regeneration, and returns the assembled class report.
report::ClassReport explain_class(const data::ClassRecord& record,
                                  const context::ClassRiskProfile& profile,
                                  const stats::ProjectBaseline& baseline,
                                  backend::ExplanationBackend& backend,
                                  const config::RunConfig& config);

struct BatchResult {
  std::vector<report::ClassReport> reports;  // selection order
  std::vector<report::GenerationFailure> failures;
  std::size_t explained = 0;      // reports that carry an explanation
  std::size_t complete = 0;       // explanations covering all three categories
  bool complete_coverage = true;  // explained > 0 and complete == explained
};

// Processes the selected records. metrics_only never touches a backend;
// explained mode generates per class, fanning out over at most
// config.backend.max_parallel workers for remote backends. Per-class backend
// failures are collected, except credential rejections, which abort the
// batch: one bad key fails every request identically.
BatchResult run_batch(const LoadedProject& project, const std::vector<std::size_t>& selection,
                      const config::RunConfig& config);

struct WrittenReports {
  std::string markdown_path;
  std::string json_path;
};

// Orders the reports in place (band desc, |z| desc, name asc) and writes
// {out_dir}/{project-slug}-report.md and .json.
WrittenReports write_reports(const LoadedProject& project, BatchResult& batch,
                             const config::RunConfig& config);

}  // namespace riskexplain::pipeline
