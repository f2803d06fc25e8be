#pragma once

#include <string>

#include "riskexplain/backend.hpp"
#include "riskexplain/dataset.hpp"
#include "riskexplain/prompt.hpp"
#include "riskexplain/report.hpp"
#include "riskexplain/taxonomy.hpp"

namespace riskexplain::config {

// Everything a run needs. Resolution order: built-in defaults, then
// environment, then config file, then CLI flags; the API credential comes
// only from RISKEXPLAIN_API_KEY.
struct RunConfig {
  std::string dataset_path;
  std::string project_name;      // empty = dataset file stem
  std::string version_override;  // empty = version column
  data::ColumnMapping mapping;

  prompt::PromptConfig prompt;
  backend::BackendConfig backend;
  taxonomy::CueConfig cues;
  int max_regenerations = 2;

  report::ReportMode mode = report::ReportMode::explained;
  std::string cache_dir = ".riskexplain-cache";
  bool cache_enabled = true;
  std::string out_dir = ".";
  bool reproducible = false;

  // Applies the reproducible contract: offline stays offline; an explicit
  // remote backend gets temperature 0 and the cache forced on.
  void finalize();
};

// Reads RISKEXPLAIN_API_KEY, RISKEXPLAIN_ENDPOINT, RISKEXPLAIN_MODEL,
// RISKEXPLAIN_BACKEND, RISKEXPLAIN_CACHE_DIR.
void apply_environment(RunConfig& config);

// "key = value" lines with '#' comments and dotted keys (documented in the
// README). Unknown keys throw InputError naming the key and line.
void apply_config_file(RunConfig& config, const std::string& path);

backend::BackendKind parse_backend_kind(const std::string& value);
report::ReportMode parse_report_mode(const std::string& value);

}  // namespace riskexplain::config
