#pragma once

#include <string>
#include <vector>

namespace riskexplain::data {

// One metric column the pipeline knows how to talk about. The four CK kinds
// are built in; any other mapped column gets a synthesized kind so prompts,
// explanations, and validation still work for it.
struct MetricKind {
  std::string id;            // lowercase key, e.g. "cbo"
  std::string acronym;       // prompt/report label, e.g. "CBO"
  std::string display_name;  // e.g. "Coupling Between Objects"
  std::string definition;    // one sentence, never empty
};

class MetricRegistry {
 public:
  // Seeded with the four core kinds: cbo, rfc, lcom, wmc.
  MetricRegistry();

  // Lookup by id; unknown ids are registered on the fly with a synthesized
  // definition so extended column mappings never yield empty metadata.
  const MetricKind& by_id(const std::string& id);

  // Case-insensitive acronym lookup ("CBO" -> cbo); nullptr when unknown.
  const MetricKind* find_by_acronym(const std::string& acronym) const;

  bool is_core(const std::string& id) const;

  // The fixed presentation order: cbo, rfc, lcom, wmc, then extras in
  // registration order.
  std::vector<std::string> known_ids() const;

 private:
  std::vector<MetricKind> kinds_;
};

// Process-wide registry; the library treats metric metadata as immutable
// reference data, extended only by loading datasets with extra columns.
MetricRegistry& metric_registry();

}  // namespace riskexplain::data
