#pragma once

#include "riskexplain/backend.hpp"

namespace riskexplain::backend {

// Chat-completions client. Sends one empty system message plus the rendered
// prompt as a single user message; reads choices[0].message.content back.
// Timeouts, HTTP 429 and 5xx retry with exponential backoff (base doubles
// per attempt, plus up to 25% jitter) until max_retries extra attempts are
// spent; 401/403 and malformed bodies fail immediately. attempt_count on the
// result records how many requests were sent.
class RemoteBackend : public ExplanationBackend {
 public:
  explicit RemoteBackend(BackendConfig config);

  std::string backend_id() const override { return config_.model_name; }
  Explanation generate(const prompt::PromptBundle& bundle,
                       const GenerateOptions& options = {}) override;

 private:
  BackendConfig config_;
  std::string scheme_host_port_;
  std::string path_;
};

}  // namespace riskexplain::backend
