#include "riskexplain/cache.hpp"

#include <fmt/core.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "riskexplain/errors.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::backend {

namespace fs = std::filesystem;
using nlohmann::json;

ResponseCache::ResponseCache(std::string directory) : directory_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) {
    throw InputError(fmt::format("cannot create cache directory {}: {}", directory_,
                                 ec.message()));
  }
}

std::string ResponseCache::entry_path(const std::string& fingerprint,
                                      const std::string& backend_id) const {
  return (fs::path(directory_) /
          fmt::format("{}-{}.json", fingerprint, text::slugify(backend_id)))
      .string();
}

std::optional<Explanation> ResponseCache::lookup(const std::string& fingerprint,
                                                 const std::string& backend_id) const {
  std::ifstream in(entry_path(fingerprint, backend_id));
  if (!in) return std::nullopt;
  json entry = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("prompt_fingerprint", "") != fingerprint ||
      entry.value("backend_id", "") != backend_id) {
    return std::nullopt;
  }
  Explanation e;
  e.text = entry.value("text", "");
  if (e.text.empty()) return std::nullopt;
  e.backend_id = backend_id;
  e.prompt_fingerprint = fingerprint;
  e.created_at = entry.value("created_at", "");
  e.attempt_count = 0;  // marks a cache hit
  return e;
}

void ResponseCache::store(const Explanation& explanation) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  json entry = {
      {"prompt_fingerprint", explanation.prompt_fingerprint},
      {"backend_id", explanation.backend_id},
      {"text", explanation.text},
      {"created_at", explanation.created_at},
  };
  std::string path = entry_path(explanation.prompt_fingerprint, explanation.backend_id);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(fmt::format("cannot write cache entry {}", tmp));
    out << entry.dump(2) << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw InputError(fmt::format("cannot finalize cache entry {}: {}", path, ec.message()));
}

CachingBackend::CachingBackend(std::unique_ptr<ExplanationBackend> inner, std::string cache_dir)
    : inner_(std::move(inner)), cache_(std::move(cache_dir)) {}

Explanation CachingBackend::generate(const prompt::PromptBundle& bundle,
                                     const GenerateOptions& options) {
  std::string fingerprint = prompt_fingerprint(bundle.rendered);
  if (!options.bypass_cache_read) {
    if (auto hit = cache_.lookup(fingerprint, inner_->backend_id())) return *hit;
  }
  Explanation fresh = inner_->generate(bundle, options);
  cache_.store(fresh);
  return fresh;
}

}  // namespace riskexplain::backend
