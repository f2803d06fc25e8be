#include "riskexplain/offline.hpp"

#include <fmt/core.h>

#include <charconv>
#include <optional>

#include "riskexplain/errors.hpp"
#include "riskexplain/metric.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::backend {

namespace {

using context::SeverityBand;

std::string preservation_advice(const std::string& metric_id, const std::string& acronym) {
  if (metric_id == "cbo") {
    return "Preserve low coupling: avoid adding new concrete dependencies; prefer small "
           "interfaces.";
  }
  if (metric_id == "rfc") {
    return "Keep the behavioral surface small: avoid adding new public methods; prefer "
           "delegating new behavior to collaborators.";
  }
  if (metric_id == "lcom") {
    return "Maintain cohesion: if a change introduces an unrelated concern, extract a helper.";
  }
  if (metric_id == "wmc") {
    return "Guard complexity: split any growing conditional into intention-revealing helpers "
           "and add tests.";
  }
  return fmt::format("Hold the line on {}: prefer changes that keep it at or below the project "
                     "norm.",
                     acronym);
}

std::string elevated_advice(const std::string& metric_id, const std::string& acronym) {
  if (metric_id == "cbo") {
    return "Coupling is drifting above the project norm: review new dependencies before "
           "extending this class, and avoid importing concrete types where an existing "
           "interface fits.";
  }
  if (metric_id == "rfc") {
    return "The response set is growing past the project norm: review before extending, and "
           "prefer moving new behavior into collaborators.";
  }
  if (metric_id == "lcom") {
    return "Cohesion is slipping: before adding state, check which methods share it and "
           "extract a helper for any unrelated concern.";
  }
  if (metric_id == "wmc") {
    return "Complexity is above the project norm: review long methods before extending them, "
           "and extract helpers for nested branching.";
  }
  return fmt::format("{} is above the project norm: review changes that push it higher and "
                     "prefer alternatives that hold it steady.",
                     acronym);
}

std::string high_advice(const std::string& metric_id, const std::string& acronym) {
  if (metric_id == "cbo") {
    return "Reduce coupling before modifying: extract stable interfaces for the heaviest "
           "dependencies and refactor callers toward them.";
  }
  if (metric_id == "rfc") {
    return "Shrink the response set: split method clusters that serve different callers, and "
           "extract collaborators for the largest ones.";
  }
  if (metric_id == "lcom") {
    return "Split along state lines: group methods by the fields they touch and extract the "
           "disjoint groups into focused classes.";
  }
  if (metric_id == "wmc") {
    return "Reduce per-method complexity: extract the deepest conditional blocks into named "
           "helpers and add tests for each extracted path.";
  }
  return fmt::format("{} is far above the project norm: refactor its main contributors "
                     "downward before extending this class.",
                     acronym);
}

std::string extreme_advice(const std::string& metric_id, const std::string& acronym) {
  if (metric_id == "cbo") {
    return "Do not add new dependencies to this class unless absolutely unavoidable; hide "
           "dependencies behind interfaces so it depends on one or two facades or ports "
           "instead of dozens of concrete classes.";
  }
  if (metric_id == "rfc") {
    return "Refactor before modifying: split this class's method set along responsibility "
           "lines and add tests around the seams first.";
  }
  if (metric_id == "lcom") {
    return "Refactor before modifying: this class bundles methods that share little state; "
           "split it by field-usage clusters and add tests per cluster before moving code.";
  }
  if (metric_id == "wmc") {
    return "Refactor before modifying: decompose the most complex methods first, add tests "
           "around current behavior, and do not grow any method further.";
  }
  return fmt::format("{} is an extreme outlier: do not extend this class before bringing {} "
                     "closer to the project norm; add tests first.",
                     acronym, acronym);
}

std::string no_variance_advice(const std::string& acronym) {
  return fmt::format("{} shows no variance across this project; avoid treating it as a "
                     "differentiator here and weigh the other metrics instead.",
                     acronym);
}

std::string actionable_advice(const std::string& metric_id, const std::string& acronym,
                              SeverityBand band) {
  switch (band) {
    case SeverityBand::favorable:
    case SeverityBand::typical:
      return preservation_advice(metric_id, acronym);
    case SeverityBand::elevated:
      return elevated_advice(metric_id, acronym);
    case SeverityBand::high:
      return high_advice(metric_id, acronym);
    case SeverityBand::extreme:
      return extreme_advice(metric_id, acronym);
    case SeverityBand::no_variance:
      return no_variance_advice(acronym);
  }
  return {};
}

struct ParsedPrompt {
  std::string class_name;
  // acronym/value pairs in prompt order
  std::vector<std::pair<std::string, double>> metrics;
  // acronym -> (mean, std_dev); empty when the prompt omitted baselines
  std::vector<std::pair<std::string, std::pair<double, double>>> baselines;
  std::string context_label;
};

double parse_double(std::string_view token, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw BackendError(fmt::format("offline backend could not parse {} from '{}'", what,
                                   std::string(token)));
  }
  return value;
}

ParsedPrompt parse_bundle(const prompt::PromptBundle& bundle) {
  ParsedPrompt parsed;

  constexpr std::string_view kMetricsMark = " class metrics: ";
  auto mark = bundle.component2_metrics.find(kMetricsMark);
  if (mark == std::string::npos) {
    throw BackendError("offline backend needs a '<class> class metrics: ...' component");
  }
  parsed.class_name = bundle.component2_metrics.substr(0, mark);
  std::string_view pairs = std::string_view(bundle.component2_metrics).substr(mark + kMetricsMark.size());
  while (!pairs.empty()) {
    auto comma = pairs.find(", ");
    std::string_view pair = comma == std::string_view::npos ? pairs : pairs.substr(0, comma);
    pairs = comma == std::string_view::npos ? std::string_view{} : pairs.substr(comma + 2);
    auto eq = pair.find('=');
    if (eq == std::string_view::npos) {
      throw BackendError(fmt::format("offline backend could not parse metric pair '{}'",
                                     std::string(pair)));
    }
    parsed.metrics.emplace_back(std::string(pair.substr(0, eq)),
                                parse_double(pair.substr(eq + 1), "a metric value"));
  }
  if (parsed.metrics.empty()) {
    throw BackendError("offline backend found no metric values in the prompt");
  }

  constexpr std::string_view kContextMark = "Project Context: ";
  constexpr std::string_view kCodebaseMark = " codebase";
  const std::string& ctx = bundle.component1_context;
  auto ctx_start = ctx.find(kContextMark);
  auto codebase = ctx.find(kCodebaseMark);
  if (ctx_start != 0 || codebase == std::string::npos) {
    throw BackendError("offline backend needs a 'Project Context: <project> codebase' component");
  }
  parsed.context_label = ctx.substr(kContextMark.size(), codebase - kContextMark.size());

  constexpr std::string_view kStatsMark = "baseline statistics -- ";
  auto stats_start = ctx.find(kStatsMark);
  if (stats_start != std::string::npos) {
    std::string_view stats = std::string_view(ctx).substr(stats_start + kStatsMark.size());
    if (!stats.empty() && stats.back() == '.') stats.remove_suffix(1);
    while (!stats.empty()) {
      auto semi = stats.find("; ");
      std::string_view entry = semi == std::string_view::npos ? stats : stats.substr(0, semi);
      stats = semi == std::string_view::npos ? std::string_view{} : stats.substr(semi + 2);
      // "CBO: μ=11.10, σ=22.52"
      auto colon = entry.find(": ");
      auto mu = entry.find("μ=");
      auto sigma = entry.find("σ=");
      auto mu_end = entry.find(',', mu);
      if (colon == std::string_view::npos || mu == std::string_view::npos ||
          sigma == std::string_view::npos || mu_end == std::string_view::npos) {
        throw BackendError(fmt::format("offline backend could not parse baseline entry '{}'",
                                       std::string(entry)));
      }
      std::string acronym(entry.substr(0, colon));
      // μ and σ are two bytes each in UTF-8
      double mean = parse_double(entry.substr(mu + 3, mu_end - (mu + 3)), "a baseline mean");
      double std_dev = parse_double(entry.substr(sigma + 3), "a baseline std dev");
      parsed.baselines.emplace_back(acronym, std::make_pair(mean, std_dev));
    }
  }
  return parsed;
}

}  // namespace

Explanation offline_generate(const context::ClassRiskProfile& profile,
                             const stats::ProjectBaseline& baseline) {
  auto& registry = data::metric_registry();

  std::string text = "### Metric Descriptions\n";
  for (const auto& a : profile.assessments) {
    const auto& kind = registry.by_id(a.metric_id);
    text += fmt::format("- {} ({}): {}\n", kind.acronym, kind.display_name, kind.definition);
  }

  text += "\n### Contextual Analysis\n";
  for (const auto& a : profile.assessments) {
    const auto* s = baseline.stats_for(a.metric_id);
    if (s != nullptr) {
      text += fmt::format("- {} Project baseline: μ={}, σ={}.\n", a.phrase,
                          text::format_two_decimals(s->mean),
                          text::format_two_decimals(s->std_dev));
    } else {
      text += fmt::format(
          "- {} = {} → No project baseline provided; compare against the project mean and σ "
          "before judging this value.\n",
          a.acronym, text::format_value(a.value));
    }
  }

  text += "\n### Actionable Suggestions\n";
  bool any_baseline = false;
  for (const auto& a : profile.assessments) {
    if (baseline.stats_for(a.metric_id) != nullptr) any_baseline = true;
  }
  if (any_baseline) {
    for (const auto& a : profile.assessments) {
      text += fmt::format("- {}\n", actionable_advice(a.metric_id, a.acronym, a.band));
    }
  } else {
    text +=
        "- Establish a project baseline (mean and σ per metric) before acting; avoid "
        "refactoring decisions based on absolute values alone.\n";
  }

  Explanation explanation;
  explanation.text = std::move(text);
  explanation.backend_id = kOfflineBackendId;
  // no prompt exists on this path; fingerprint the canonical profile line-up
  std::string digest_input = "offline:" + profile.class_name;
  for (const auto& a : profile.assessments) {
    digest_input += fmt::format("|{}={}:{}", a.metric_id, a.value, context::band_name(a.band));
  }
  explanation.prompt_fingerprint = prompt_fingerprint(digest_input);
  explanation.created_at = current_utc_timestamp();
  explanation.attempt_count = 1;
  return explanation;
}

Explanation OfflineBackend::generate(const prompt::PromptBundle& bundle,
                                     const GenerateOptions&) {
  ParsedPrompt parsed = parse_bundle(bundle);
  auto& registry = data::metric_registry();

  stats::ProjectBaseline baseline;
  baseline.project_name = parsed.context_label;
  for (const auto& [acronym, figures] : parsed.baselines) {
    const auto* kind = registry.find_by_acronym(acronym);
    std::string metric_id = kind != nullptr ? kind->id : text::to_lower(acronym);
    stats::MetricStats s;
    s.mean = figures.first;
    s.std_dev = figures.second;
    s.count = 0;  // unknown from the prompt text
    s.min = s.max = figures.first;
    baseline.metric_ids.push_back(metric_id);
    baseline.metrics[metric_id] = s;
  }

  context::ClassRiskProfile profile;
  profile.class_name = parsed.class_name;
  for (const auto& [acronym, value] : parsed.metrics) {
    const auto* kind = registry.find_by_acronym(acronym);
    std::string metric_id = kind != nullptr ? kind->id : text::to_lower(acronym);
    context::ContextualAssessment a;
    a.metric_id = metric_id;
    a.acronym = registry.by_id(metric_id).acronym;
    a.value = value;
    const auto* s = baseline.stats_for(metric_id);
    if (s != nullptr) {
      a.distance = stats::sigma_distance(value, s->mean, s->std_dev);
      a.band = context::classify_severity(a.distance, thresholds_);
      a.baseline_mean = s->mean;
      a.baseline_std = s->std_dev;
      a.phrase = context::severity_phrase(a.acronym, value, a.distance, a.band);
    } else {
      a.distance = stats::SigmaDistance{};
      a.band = context::SeverityBand::no_variance;
    }
    profile.assessments.push_back(std::move(a));
  }

  SeverityBand overall = SeverityBand::no_variance;
  for (const auto& a : profile.assessments) {
    if (a.band == SeverityBand::no_variance) continue;
    if (context::band_rank(a.band) > context::band_rank(overall)) overall = a.band;
  }
  profile.overall_band = overall;

  Explanation explanation = offline_generate(profile, baseline);
  explanation.prompt_fingerprint = prompt_fingerprint(bundle.rendered);
  return explanation;
}

}  // namespace riskexplain::backend
