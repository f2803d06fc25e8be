#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "riskexplain/backend.hpp"

namespace riskexplain::backend {

// Disk cache keyed by (prompt_fingerprint, backend_id). One JSON file per
// entry: {prompt_fingerprint, backend_id, text, created_at}. Writes are
// serialized; reads are lock-free apart from the filesystem.
class ResponseCache {
 public:
  explicit ResponseCache(std::string directory);

  std::optional<Explanation> lookup(const std::string& fingerprint,
                                    const std::string& backend_id) const;
  void store(const Explanation& explanation);

  const std::string& directory() const { return directory_; }

 private:
  std::string entry_path(const std::string& fingerprint, const std::string& backend_id) const;

  std::string directory_;
  std::mutex write_mutex_;
};

// Decorator: serves lookups before delegating, stores successes after.
// Cache hits return attempt_count = 0 and never touch the inner backend.
class CachingBackend : public ExplanationBackend {
 public:
  CachingBackend(std::unique_ptr<ExplanationBackend> inner, std::string cache_dir);

  std::string backend_id() const override { return inner_->backend_id(); }
  Explanation generate(const prompt::PromptBundle& bundle,
                       const GenerateOptions& options = {}) override;

 private:
  std::unique_ptr<ExplanationBackend> inner_;
  ResponseCache cache_;
};

}  // namespace riskexplain::backend
