#include "riskexplain/prompt.hpp"

#include <fmt/core.h>

#include <set>

#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::prompt {

namespace {

// "org.apache.camel.Exchange" / "Exchange.java" -> "Exchange"
std::string short_class_name(const std::string& class_name) {
  std::string name = class_name;
  constexpr std::string_view kJava = ".java";
  if (name.size() > kJava.size() &&
      name.compare(name.size() - kJava.size(), kJava.size(), kJava) == 0) {
    name.resize(name.size() - kJava.size());
  }
  auto dot = name.find_last_of("./");
  if (dot != std::string::npos) name = name.substr(dot + 1);
  return name;
}

// Prompts address the class the way a reviewer sees it in the tree, as a
// source file: "Exchange.java", never the fully qualified name.
std::string file_display_name(const std::string& class_name) {
  return short_class_name(class_name) + ".java";
}

}  // namespace

void PromptConfig::validate() const {
  std::set<std::string> seen;
  for (const auto& id : metric_order) {
    if (!seen.insert(id).second) {
      throw InputError(fmt::format("metric_order lists '{}' more than once", id));
    }
  }
}

PromptBundle compose_prompt(const data::ClassRecord& record,
                            const stats::ProjectBaseline& baseline,
                            const PromptConfig& config) {
  config.validate();

  const auto& order = config.metric_order.empty() ? baseline.metric_ids : config.metric_order;
  auto& registry = data::metric_registry();

  std::string metrics_list;
  for (const auto& metric_id : order) {
    auto value = record.metric_value(metric_id);
    if (!value) continue;
    if (!baseline.stats_for(metric_id)) {
      throw InputError(fmt::format(
          "baseline does not cover metric '{}' required for the prompt", metric_id));
    }
    if (!metrics_list.empty()) metrics_list += ", ";
    metrics_list +=
        fmt::format("{}={}", registry.by_id(metric_id).acronym, text::format_value(*value));
  }
  if (metrics_list.empty()) {
    throw InputError(fmt::format("class {} has no values for any requested metric; nothing to "
                                 "explain",
                                 record.class_name));
  }

  std::string project_label = config.project_label.empty()
                                  ? baseline.project_name + " project"
                                  : config.project_label;

  std::string display_name = file_display_name(record.class_name);

  PromptBundle bundle;
  bundle.instruction =
      fmt::format("Explain the following software metrics for class {} to {} to the {}.",
                  display_name, config.audience, project_label);

  bundle.component2_metrics = fmt::format("{} class metrics: {}", display_name, metrics_list);

  if (config.include_baseline) {
    std::string stats_list;
    for (const auto& metric_id : order) {
      const auto* s = baseline.stats_for(metric_id);
      if (!s) continue;
      if (!stats_list.empty()) stats_list += "; ";
      stats_list += fmt::format("{}: μ={}, σ={}", registry.by_id(metric_id).acronym,
                                text::format_two_decimals(s->mean),
                                text::format_two_decimals(s->std_dev));
    }
    bundle.component1_context =
        fmt::format("Project Context: {} codebase with baseline statistics -- {}.",
                    baseline.context_label(), stats_list);
  } else {
    bundle.component1_context =
        fmt::format("Project Context: {} codebase.", baseline.context_label());
  }

  std::string short_name = short_class_name(record.class_name);
  bundle.component3_requirements = fmt::format(
      "Required Analysis: (1) Clear definition of each metric and what it measures, (2) "
      "Analysis of what the {} class metrics indicate in this project context, (3) Actionable "
      "improvement suggestions based on the project baselines and {} class metrics.",
      short_name, short_name);

  bundle.component4_format =
      "Use clear, actionable language suitable for code review discussions.";

  bundle.rendered = fmt::format("{}\n{}\n{}\n\n{} {}", bundle.instruction,
                                bundle.component2_metrics, bundle.component1_context,
                                bundle.component3_requirements, bundle.component4_format);
  return bundle;
}

}  // namespace riskexplain::prompt
