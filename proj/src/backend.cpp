#include "riskexplain/backend.hpp"

#include <fmt/core.h>

#include "riskexplain/cache.hpp"
#include "riskexplain/errors.hpp"
#include "riskexplain/offline.hpp"
#include "riskexplain/remote.hpp"

namespace riskexplain::backend {

void BackendConfig::validate() const {
  thresholds.validate();
  if (temperature < 0.0) throw InputError("temperature must be >= 0");
  if (max_retries < 0) throw InputError("max_retries must be >= 0");
  if (request_timeout <= 0.0) throw InputError("request_timeout must be > 0");
  if (max_parallel < 1) throw InputError("max_parallel must be >= 1");
  if (backoff_base_seconds < 0.0) throw InputError("backoff base must be >= 0");
  if (kind == BackendKind::remote) {
    if (endpoint_url.empty()) {
      throw BackendError("remote backend requires an endpoint URL");
    }
    if (api_key.empty()) {
      throw BackendError("remote backend requires a credential: set RISKEXPLAIN_API_KEY");
    }
  }
}

std::unique_ptr<ExplanationBackend> make_backend(const BackendConfig& config,
                                                 const std::string& cache_dir,
                                                 bool cache_enabled) {
  config.validate();
  if (config.kind == BackendKind::offline) {
    // pure and instant; caching would only add filesystem noise
    return std::make_unique<OfflineBackend>(config.thresholds);
  }
  auto remote = std::make_unique<RemoteBackend>(config);
  if (cache_enabled && !cache_dir.empty()) {
    return std::make_unique<CachingBackend>(std::move(remote), cache_dir);
  }
  return remote;
}

}  // namespace riskexplain::backend
