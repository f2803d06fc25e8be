#include "riskexplain/pipeline.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "riskexplain/errors.hpp"
#include "riskexplain/taxonomy.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::pipeline {

namespace fs = std::filesystem;

LoadedProject load_project(const config::RunConfig& config) {
  std::string project_name = config.project_name;
  if (project_name.empty()) {
    project_name = fs::path(config.dataset_path).stem().string();
  }
  auto loaded = data::load_dataset(config.dataset_path, config.mapping, project_name,
                                   config.version_override);
  LoadedProject project;
  project.baseline = stats::compute_baseline(loaded.dataset);
  project.dataset = std::move(loaded.dataset);
  project.load_report = std::move(loaded.report);
  return project;
}

std::vector<context::ClassRiskProfile> profile_all(
    const LoadedProject& project, const context::SeverityThresholds& thresholds) {
  const auto& records = project.dataset.records;
  std::vector<context::ClassRiskProfile> profiles;
  profiles.reserve(records.size());
  for (const auto& record : records) {
    profiles.push_back(context::assess_class(record, project.baseline, thresholds));
  }

  // Competition ranking over bug counts: sort a copy descending, then rank =
  // first position holding an equal count. Only classes with documented bugs
  // get a rank; a tie among zeroes says nothing worth reporting.
  std::vector<long> counts;
  counts.reserve(records.size());
  for (const auto& record : records) counts.push_back(record.bug_count);
  std::sort(counts.begin(), counts.end(), std::greater<>());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (records[i].bug_count < 1) continue;
    auto it = std::lower_bound(counts.begin(), counts.end(), records[i].bug_count,
                               std::greater<>());
    profiles[i].bug_rank = static_cast<std::size_t>(it - counts.begin()) + 1;
    profiles[i].class_total = records.size();
  }
  return profiles;
}

std::vector<std::size_t> select_classes(const data::ProjectDataset& dataset,
                                        const std::string& pattern) {
  const bool use_glob = pattern.find('*') != std::string::npos ||
                        pattern.find('?') != std::string::npos;
  std::vector<std::size_t> selection;
  for (std::size_t i = 0; i < dataset.records.size(); ++i) {
    const auto& name = dataset.records[i].class_name;
    bool hit = pattern.empty() ||
               (use_glob ? text::glob_match(pattern, name) : text::icontains(name, pattern));
    if (hit) selection.push_back(i);
  }
  if (selection.empty()) {
    throw SelectionError(fmt::format("no class matches '{}' in project {}", pattern,
                                     dataset.project_name));
  }
  return selection;
}

report::ClassReport explain_class(const data::ClassRecord& record,
                                  const context::ClassRiskProfile& profile,
                                  const stats::ProjectBaseline& baseline,
                                  backend::ExplanationBackend& backend,
                                  const config::RunConfig& config) {
  auto bundle = prompt::compose_prompt(record, baseline, config.prompt);
  auto [explanation, coverage] = taxonomy::validate_and_retry(
      bundle, profile, backend, config.max_regenerations, config.cues);
  report::ClassReport out;
  out.profile = profile;
  out.explanation = std::move(explanation);
  out.coverage = std::move(coverage);
  return out;
}

namespace {

struct BatchSlot {
  report::ClassReport report;
  std::string error;  // non-empty marks a failure
  bool failed = false;
};

}  // namespace

BatchResult run_batch(const LoadedProject& project, const std::vector<std::size_t>& selection,
                      const config::RunConfig& config) {
  auto profiles = profile_all(project, config.backend.thresholds);

  BatchResult result;
  result.reports.reserve(selection.size());

  if (config.mode == report::ReportMode::metrics_only) {
    result.complete_coverage = false;  // nothing generated, nothing to cover
    for (auto idx : selection) {
      report::ClassReport r;
      r.profile = profiles[idx];
      result.reports.push_back(std::move(r));
    }
    return result;
  }

  auto backend = backend::make_backend(config.backend, config.cache_dir, config.cache_enabled);

  std::vector<BatchSlot> slots(selection.size());
  std::exception_ptr abort_error;
  std::mutex abort_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};

  auto worker = [&]() {
    while (!aborted.load()) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= selection.size()) break;
      std::size_t idx = selection[slot];
      try {
        slots[slot].report = explain_class(project.dataset.records[idx], profiles[idx],
                                           project.baseline, *backend, config);
      } catch (const AuthError&) {
        // A rejected credential fails every request the same way; stop the
        // fan-out instead of hammering the endpoint once per class.
        std::lock_guard lock(abort_mutex);
        if (!abort_error) abort_error = std::current_exception();
        aborted.store(true);
      } catch (const Error& e) {
        slots[slot].failed = true;
        slots[slot].error = e.what();
      }
    }
  };

  std::size_t workers = 1;
  if (config.backend.kind == backend::BackendKind::remote) {
    workers = std::min<std::size_t>(std::max(config.backend.max_parallel, 1), selection.size());
  }
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (abort_error) std::rethrow_exception(abort_error);

  for (std::size_t slot = 0; slot < selection.size(); ++slot) {
    if (slots[slot].failed) {
      result.failures.push_back(
          {project.dataset.records[selection[slot]].class_name, slots[slot].error});
      continue;
    }
    auto& r = slots[slot].report;
    if (r.explanation) {
      ++result.explained;
      if (r.coverage && r.coverage->complete) ++result.complete;
    }
    result.reports.push_back(std::move(r));
  }
  result.complete_coverage = result.explained > 0 && result.complete == result.explained;
  return result;
}

WrittenReports write_reports(const LoadedProject& project, BatchResult& batch,
                             const config::RunConfig& config) {
  report::order_reports(batch.reports);

  fs::path out_dir(config.out_dir.empty() ? "." : config.out_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw InputError(fmt::format("cannot create output directory {}: {}", out_dir.string(),
                                 ec.message()));
  }

  std::string slug = text::slugify(project.dataset.project_name);
  WrittenReports written;
  written.markdown_path = (out_dir / (slug + "-report.md")).string();
  written.json_path = (out_dir / (slug + "-report.json")).string();

  auto write_file = [](const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(fmt::format("cannot write {}", path));
    out << content;
  };

  write_file(written.markdown_path,
             report::render_project_report_md(project.dataset, project.baseline, batch.reports,
                                              config.mode, batch.failures));
  write_file(written.json_path,
             report::project_report_json(project.dataset, project.baseline, batch.reports,
                                         config.mode, batch.failures)
                     .dump(2) +
                 "\n");
  return written;
}

}  // namespace riskexplain::pipeline
