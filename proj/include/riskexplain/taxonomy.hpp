#pragma once

#include <map>
#include <string>
#include <vector>

#include "riskexplain/assess.hpp"
#include "riskexplain/backend.hpp"

namespace riskexplain::taxonomy {

// Lexical cue lists. Detection is deliberately heuristic and deterministic:
// it checks structured outputs the prompt explicitly asks for, not free-form
// semantics. Extend via config; matching ignores ASCII case.
struct CueConfig {
  std::vector<std::string> descriptive_cues = {
      "measures", "number of", "how many", "degree to which", "sum of", "is defined",
  };
  std::vector<std::string> contextual_cues = {
      "σ", "sigma", "mean", "baseline", "average", "standard deviation",
  };
  std::vector<std::string> actionable_cues = {
      "refactor", "extract", "avoid", "split", "prefer", "do not", "add tests",
  };
  // pair cue: sentence mentions the first word somewhere before the second
  std::vector<std::pair<std::string, std::string>> actionable_gap_cues = {
      {"hide", "behind"},
  };
};

struct EvidenceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::string excerpt;  // verbatim slice of the input at [offset, offset+length)
};

struct TaxonomyCoverage {
  bool has_descriptive = false;
  bool has_contextual = false;
  bool has_actionable = false;
  std::map<std::string, std::vector<EvidenceSpan>> evidence;  // keyed by category
  bool complete = false;  // all three
};

// Category rules, evaluated per sentence:
//   descriptive: every profiled metric appears (acronym as a word, or display
//     name) in some sentence that also carries a definitional cue;
//   contextual: at least one sentence pairs a metric mention with a baseline
//     reference (cue word or a z-style figure such as "z = 1.9");
//   actionable: at least one sentence carries an imperative cue.
// An absent category is a valid incomplete result, never an error.
TaxonomyCoverage validate(const std::string& explanation_text,
                          const context::ClassRiskProfile& profile,
                          const CueConfig& cues = {});

// Regenerates while coverage is incomplete (fresh generations bypass the
// response cache's read path), up to max_regenerations extra attempts, and
// returns the attempt covering the most categories; earliest wins ties, so
// cached first answers stay stable. Backend errors propagate.
std::pair<backend::Explanation, TaxonomyCoverage> validate_and_retry(
    const prompt::PromptBundle& bundle, const context::ClassRiskProfile& profile,
    backend::ExplanationBackend& backend, int max_regenerations, const CueConfig& cues = {});

}  // namespace riskexplain::taxonomy
