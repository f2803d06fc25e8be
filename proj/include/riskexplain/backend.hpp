#pragma once

#include <memory>
#include <string>

#include "riskexplain/prompt.hpp"
#include "riskexplain/severity.hpp"

namespace riskexplain::backend {

enum class BackendKind { offline, remote };

struct BackendConfig {
  BackendKind kind = BackendKind::offline;
  std::string endpoint_url;  // remote only, e.g. http://host:port/v1/chat/completions
  std::string model_name = "offline-v1";
  double temperature = 0.0;
  int max_retries = 3;          // retries after the first attempt
  double request_timeout = 60;  // seconds
  int max_parallel = 4;
  double backoff_base_seconds = 1.0;  // first retry delay; doubles each retry
  std::string api_key;                // from the environment; never logged
  context::SeverityThresholds thresholds;

  // Throws on remote without endpoint or credential, or invalid numerics.
  void validate() const;
};

struct Explanation {
  std::string text;
  std::string backend_id;          // model name, or "offline-v1"
  std::string prompt_fingerprint;  // sha256 hex of the exact rendered prompt
  std::string created_at;          // ISO-8601 UTC; excluded from reports
  int attempt_count = 0;           // HTTP tries; 0 = served from cache
};

struct GenerateOptions {
  // validate_and_retry sets this on regeneration attempts so a cached first
  // answer cannot satisfy the retry loop forever.
  bool bypass_cache_read = false;
};

class ExplanationBackend {
 public:
  virtual ~ExplanationBackend() = default;
  virtual std::string backend_id() const = 0;
  virtual Explanation generate(const prompt::PromptBundle& bundle,
                               const GenerateOptions& options = {}) = 0;
};

// sha256 hex digest (lowercase) of the exact input text.
std::string prompt_fingerprint(const std::string& rendered_prompt);

std::string current_utc_timestamp();

// offline -> OfflineBackend; remote -> RemoteBackend wrapped in the response
// cache when cache_dir is non-empty.
std::unique_ptr<ExplanationBackend> make_backend(const BackendConfig& config,
                                                 const std::string& cache_dir,
                                                 bool cache_enabled);

}  // namespace riskexplain::backend
