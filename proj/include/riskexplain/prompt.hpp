#pragma once

#include <string>
#include <vector>

#include "riskexplain/dataset.hpp"
#include "riskexplain/stats.hpp"

namespace riskexplain::prompt {

struct PromptConfig {
  std::string audience = "a new contributor";
  // Project phrase for the instruction sentence ("Apache Camel project").
  // Empty means derive "<baseline.project_name> project".
  std::string project_label;
  bool include_baseline = true;
  // empty = the baseline's metric order
  std::vector<std::string> metric_order;

  // Throws InputError on duplicate metric ids in metric_order.
  void validate() const;
};

// The four template components plus the leading instruction sentence.
// `rendered` lays them out the way the generation endpoint receives them:
// instruction, class metrics, project context, then the analysis request and
// format sentence joined on one line. Component numbering reflects what each
// part establishes (1 = project context, 2 = class metrics, 3 = required
// analysis, 4 = output format), not its position in the rendered text.
struct PromptBundle {
  std::string instruction;
  std::string component1_context;
  std::string component2_metrics;
  std::string component3_requirements;
  std::string component4_format;
  std::string rendered;
};

// Renders the prompt for one class. Metric values print as integers when
// integral (otherwise two decimals); baseline figures always print with two
// decimals, straight from the baseline with no recomputation. Throws
// InputError when the record has no value for any metric in the order
// (nothing to explain).
PromptBundle compose_prompt(const data::ClassRecord& record,
                            const stats::ProjectBaseline& baseline,
                            const PromptConfig& config = {});

}  // namespace riskexplain::prompt
