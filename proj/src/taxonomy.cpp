#include "riskexplain/taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include "riskexplain/metric.hpp"
#include "riskexplain/text.hpp"

namespace riskexplain::taxonomy {

namespace {

using text::Sentence;

bool sentence_mentions_metric(std::string_view sentence, const data::MetricKind& kind) {
  return text::contains_word(sentence, kind.acronym) ||
         text::icontains(sentence, kind.display_name);
}

bool sentence_mentions_any_metric(std::string_view sentence,
                                  const context::ClassRiskProfile& profile) {
  auto& registry = data::metric_registry();
  for (const auto& a : profile.assessments) {
    if (sentence_mentions_metric(sentence, registry.by_id(a.metric_id))) return true;
  }
  return false;
}

bool has_any_cue(std::string_view sentence, const std::vector<std::string>& cues) {
  for (const auto& cue : cues) {
    if (text::icontains(sentence, cue)) return true;
  }
  return false;
}

// "z = 1.9", "z=+0.2", "z-score of 3": a z token attached to a figure
bool has_z_figure(std::string_view sentence) {
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    char c = sentence[i];
    if (c != 'z' && c != 'Z') continue;
    bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(sentence[i - 1]));
    if (!left_ok) continue;
    std::size_t j = i + 1;
    while (j < sentence.size() && (sentence[j] == ' ' || sentence[j] == '=' ||
                                   sentence[j] == '+' || sentence[j] == '-')) {
      ++j;
    }
    if (j > i + 1 && j < sentence.size() &&
        std::isdigit(static_cast<unsigned char>(sentence[j]))) {
      return true;
    }
  }
  return false;
}

bool has_gap_cue(std::string_view sentence,
                 const std::vector<std::pair<std::string, std::string>>& gap_cues) {
  std::string lower = text::to_lower(sentence);
  for (const auto& [first, second] : gap_cues) {
    auto first_pos = lower.find(text::to_lower(first));
    if (first_pos == std::string::npos) continue;
    if (lower.find(text::to_lower(second), first_pos + first.size()) != std::string::npos) {
      return true;
    }
  }
  return false;
}

EvidenceSpan make_span(const std::string& full_text, const Sentence& s) {
  EvidenceSpan span;
  span.offset = s.offset;
  span.length = s.length;
  span.excerpt = full_text.substr(s.offset, s.length);
  return span;
}

void add_span(TaxonomyCoverage& coverage, const std::string& category,
              const std::string& full_text, const Sentence& s) {
  auto& spans = coverage.evidence[category];
  for (const auto& existing : spans) {
    if (existing.offset == s.offset && existing.length == s.length) return;
  }
  spans.push_back(make_span(full_text, s));
}

}  // namespace

TaxonomyCoverage validate(const std::string& explanation_text,
                          const context::ClassRiskProfile& profile, const CueConfig& cues) {
  TaxonomyCoverage coverage;
  auto sentences = text::split_sentences(explanation_text);
  auto& registry = data::metric_registry();

  // descriptive: every profiled metric needs its own defining sentence
  bool all_defined = !profile.assessments.empty();
  for (const auto& a : profile.assessments) {
    const auto& kind = registry.by_id(a.metric_id);
    bool found = false;
    for (const auto& s : sentences) {
      std::string_view sentence(explanation_text.data() + s.offset, s.length);
      if (sentence_mentions_metric(sentence, kind) &&
          has_any_cue(sentence, cues.descriptive_cues)) {
        add_span(coverage, "descriptive", explanation_text, s);
        found = true;
        break;
      }
    }
    all_defined = all_defined && found;
  }
  coverage.has_descriptive = all_defined;
  if (!coverage.has_descriptive) coverage.evidence.erase("descriptive");

  for (const auto& s : sentences) {
    std::string_view sentence(explanation_text.data() + s.offset, s.length);
    if (sentence_mentions_any_metric(sentence, profile) &&
        (has_any_cue(sentence, cues.contextual_cues) || has_z_figure(sentence))) {
      coverage.has_contextual = true;
      add_span(coverage, "contextual", explanation_text, s);
    }
    if (has_any_cue(sentence, cues.actionable_cues) ||
        has_gap_cue(sentence, cues.actionable_gap_cues)) {
      coverage.has_actionable = true;
      add_span(coverage, "actionable", explanation_text, s);
    }
  }

  coverage.complete =
      coverage.has_descriptive && coverage.has_contextual && coverage.has_actionable;
  return coverage;
}

std::pair<backend::Explanation, TaxonomyCoverage> validate_and_retry(
    const prompt::PromptBundle& bundle, const context::ClassRiskProfile& profile,
    backend::ExplanationBackend& backend, int max_regenerations, const CueConfig& cues) {
  auto count_categories = [](const TaxonomyCoverage& c) {
    return int(c.has_descriptive) + int(c.has_contextual) + int(c.has_actionable);
  };

  backend::GenerateOptions options;
  backend::Explanation best_explanation = backend.generate(bundle, options);
  TaxonomyCoverage best_coverage = validate(best_explanation.text, profile, cues);

  for (int regen = 0; regen < max_regenerations && !best_coverage.complete; ++regen) {
    options.bypass_cache_read = true;
    backend::Explanation attempt = backend.generate(bundle, options);
    TaxonomyCoverage attempt_coverage = validate(attempt.text, profile, cues);
    if (count_categories(attempt_coverage) > count_categories(best_coverage)) {
      best_explanation = std::move(attempt);
      best_coverage = std::move(attempt_coverage);
    }
  }
  return {std::move(best_explanation), std::move(best_coverage)};
}

}  // namespace riskexplain::taxonomy
