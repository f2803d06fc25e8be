#include "riskexplain/config.hpp"

#include <fmt/core.h>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "riskexplain/errors.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::config {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_bool(const std::string& value, const std::string& key) {
  std::string v = text::to_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InputError(fmt::format("config key '{}' expects a boolean, got '{}'", key, value));
}

double parse_number(const std::string& value, const std::string& key) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InputError(fmt::format("config key '{}' expects a number, got '{}'", key, value));
  }
  return out;
}

int parse_int(const std::string& value, const std::string& key) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InputError(fmt::format("config key '{}' expects an integer, got '{}'", key, value));
  }
  return out;
}

void apply_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "project.name") { c.project_name = value; return; }
  if (key == "project.version") { c.version_override = value; return; }
  if (key == "mapping.name") { c.mapping.name_column = value; return; }
  if (key == "mapping.version") { c.mapping.version_column = value; return; }
  if (key == "mapping.bug") { c.mapping.bug_column = value; return; }
  if (key.rfind("mapping.metric.", 0) == 0) {
    std::string metric_id = key.substr(std::string("mapping.metric.").size());
    if (metric_id.empty()) throw InputError("config key 'mapping.metric.' lacks a metric id");
    c.mapping.set_metric_column(text::to_lower(metric_id), value);
    return;
  }
  if (key == "prompt.audience") { c.prompt.audience = value; return; }
  if (key == "prompt.project_label") { c.prompt.project_label = value; return; }
  if (key == "prompt.include_baseline") {
    c.prompt.include_baseline = parse_bool(value, key);
    return;
  }
  if (key == "prompt.metric_order") { c.prompt.metric_order = text::split_list(value); return; }
  if (key == "backend.kind") { c.backend.kind = parse_backend_kind(value); return; }
  if (key == "backend.endpoint") { c.backend.endpoint_url = value; return; }
  if (key == "backend.model") { c.backend.model_name = value; return; }
  if (key == "backend.temperature") {
    c.backend.temperature = parse_number(value, key);
    return;
  }
  if (key == "backend.max_retries") { c.backend.max_retries = parse_int(value, key); return; }
  if (key == "backend.timeout_seconds") {
    c.backend.request_timeout = parse_number(value, key);
    return;
  }
  if (key == "backend.max_parallel") { c.backend.max_parallel = parse_int(value, key); return; }
  if (key == "backend.backoff_base_seconds") {
    c.backend.backoff_base_seconds = parse_number(value, key);
    return;
  }
  if (key == "thresholds.favorable_below") {
    c.backend.thresholds.favorable_below = parse_number(value, key);
    return;
  }
  if (key == "thresholds.elevated_at") {
    c.backend.thresholds.elevated_at = parse_number(value, key);
    return;
  }
  if (key == "thresholds.high_at") {
    c.backend.thresholds.high_at = parse_number(value, key);
    return;
  }
  if (key == "thresholds.extreme_at") {
    c.backend.thresholds.extreme_at = parse_number(value, key);
    return;
  }
  if (key == "taxonomy.descriptive_cues") {
    for (auto& cue : text::split_list(value)) c.cues.descriptive_cues.push_back(std::move(cue));
    return;
  }
  if (key == "taxonomy.contextual_cues") {
    for (auto& cue : text::split_list(value)) c.cues.contextual_cues.push_back(std::move(cue));
    return;
  }
  if (key == "taxonomy.actionable_cues") {
    for (auto& cue : text::split_list(value)) c.cues.actionable_cues.push_back(std::move(cue));
    return;
  }
  if (key == "taxonomy.max_regenerations") {
    c.max_regenerations = parse_int(value, key);
    return;
  }
  if (key == "cache.dir") { c.cache_dir = value; return; }
  if (key == "cache.enabled") { c.cache_enabled = parse_bool(value, key); return; }
  if (key == "output.dir") { c.out_dir = value; return; }
  if (key == "report.mode") { c.mode = parse_report_mode(value); return; }
  throw InputError(fmt::format("unknown config key '{}'", key));
}

}  // namespace

void RunConfig::finalize() {
  if (reproducible) {
    if (backend.kind == backend::BackendKind::remote) {
      backend.temperature = 0.0;
      cache_enabled = true;
    } else {
      backend.kind = backend::BackendKind::offline;
    }
  }
}

void apply_environment(RunConfig& config) {
  if (const char* v = std::getenv("RISKEXPLAIN_API_KEY")) config.backend.api_key = v;
  if (const char* v = std::getenv("RISKEXPLAIN_ENDPOINT")) config.backend.endpoint_url = v;
  if (const char* v = std::getenv("RISKEXPLAIN_MODEL")) config.backend.model_name = v;
  if (const char* v = std::getenv("RISKEXPLAIN_BACKEND")) {
    config.backend.kind = parse_backend_kind(v);
  }
  if (const char* v = std::getenv("RISKEXPLAIN_CACHE_DIR")) config.cache_dir = v;
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("config file not found: {}", path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw InputError(
          fmt::format("{}:{}: expected 'key = value', got '{}'", path, line_no, stripped));
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw InputError(fmt::format("{}:{}: empty key", path, line_no));
    }
    try {
      apply_key(config, key, value);
    } catch (const InputError& e) {
      throw InputError(fmt::format("{}:{}: {}", path, line_no, e.what()));
    }
  }
}

backend::BackendKind parse_backend_kind(const std::string& value) {
  std::string v = text::to_lower(value);
  if (v == "offline") return backend::BackendKind::offline;
  if (v == "remote") return backend::BackendKind::remote;
  throw InputError(fmt::format("backend must be 'offline' or 'remote', got '{}'", value));
}

report::ReportMode parse_report_mode(const std::string& value) {
  std::string v = text::to_lower(value);
  if (v == "metrics_only" || v == "metrics-only") return report::ReportMode::metrics_only;
  if (v == "explained") return report::ReportMode::explained;
  throw InputError(fmt::format("mode must be 'metrics_only' or 'explained', got '{}'", value));
}

}  // namespace riskexplain::config
