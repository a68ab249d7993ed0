#pragma once

#include <string>
#include <vector>

#include "convpriv/core.hpp"

// Predicts a ControlLevel for a MetadataTuple by weighted rule voting,
// with a hard High override when a privacy phrase was detected.

namespace convpriv {

// Full: a rule votes only when its whole antecedent is present in the
// sample. Partial: a rule votes when at least one antecedent item
// matches, contributing the average weight of the matched items only.
enum class MatchMode { Full, Partial };

const std::string& to_string(MatchMode mode);
MatchMode match_mode_from_string(const std::string& name);

struct ExplanationEntry {
  Rule rule;
  std::vector<Item> matched;  // antecedent items present in the sample
  double contribution = 0.0;  // average weight of the counted items
};

struct Explanation {
  std::vector<ExplanationEntry> entries;  // rules whose vote fired
  ControlTally tally;
  ControlLevel predicted = ControlLevel::High;
  bool overridden = false;
};

// Per-level vote totals: each qualifying rule adds the average weight of
// its counted antecedent items to its consequent's tally.
ControlTally score_controls(const MetadataTuple& sample, const RuleSet& ruleset,
                            MatchMode mode = MatchMode::Full);

// privacy_phrase forces High; otherwise the tally argmax with ties toward
// the higher level, and High when no rule voted at all.
ControlLevel predict(const MetadataTuple& sample, const RuleSet& ruleset,
                     MatchMode mode = MatchMode::Full);

Explanation explain(const MetadataTuple& sample, const RuleSet& ruleset,
                    MatchMode mode = MatchMode::Full);

}  // namespace convpriv
