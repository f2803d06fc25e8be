#pragma once

#include "riskexplain/assess.hpp"
#include "riskexplain/backend.hpp"

namespace riskexplain::backend {

inline constexpr const char* kOfflineBackendId = "offline-v1";

// Deterministic rule-based generator. Output is three titled sections in
// order: "### Metric Descriptions" (one definition per assessed metric),
// "### Contextual Analysis" (the severity phrase per metric plus its
// baseline figures), "### Actionable Suggestions" (rule table keyed on
// metric and band; favorable/typical cells give preservation guidance,
// elevated through extreme escalate). Identical inputs produce byte-identical
// text, and the text always satisfies the taxonomy validator's three
// categories for the profiled metrics.
Explanation offline_generate(const context::ClassRiskProfile& profile,
                             const stats::ProjectBaseline& baseline);

class OfflineBackend : public ExplanationBackend {
 public:
  explicit OfflineBackend(context::SeverityThresholds thresholds = {})
      : thresholds_(thresholds) {}

  std::string backend_id() const override { return kOfflineBackendId; }

  // Reconstructs class, values, and baseline figures from the bundle's own
  // component strings (the composer's formats are fixed), re-derives bands,
  // and renders. A prompt composed without baselines yields explanations
  // that say so instead of quoting z figures. Throws BackendError when the
  // bundle does not follow the composer's component formats.
  Explanation generate(const prompt::PromptBundle& bundle,
                       const GenerateOptions& options = {}) override;

 private:
  context::SeverityThresholds thresholds_;
};

}  // namespace riskexplain::backend
