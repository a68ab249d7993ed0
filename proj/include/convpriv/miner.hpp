#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "convpriv/core.hpp"

// Association rule mining: antecedents are metadata items, consequents are
// control levels. Rules come from a modified apriori run at a sweep of
// support thresholds.

namespace convpriv {

// Attribute name reserved for the label item inside transactions.
inline const std::string kLabelAttribute = "control";

struct Transaction {
  std::vector<Item> items;  // one item per populated attribute, sorted
  std::optional<ControlLevel> label;

  static Transaction from_tuple(const MetadataTuple& tuple,
                                ControlLevel label);
};

struct MinerConfig {
  std::size_t n_supports = 10;       // sweep runs at supports 0/n .. N/n
  double min_confidence = 0.5;
  std::size_t max_antecedent_size = 7;
};

using Itemset = std::vector<Item>;  // sorted

// Frequent itemsets over the transactions (label items included in the
// item universe): itemset X is frequent iff count(X) >= max(1,
// ceil(support * n)). Supports are reported as count / n.
std::map<Itemset, double> mine_frequent_itemsets(
    const std::vector<Transaction>& transactions, double support);

// Rules from frequent itemsets containing exactly one label item:
// antecedent = the non-label items (non-empty), consequent = the label,
// confidence = count(antecedent + label) / count(antecedent). Keeps rules
// with confidence >= min_confidence; one rule per antecedent (highest
// confidence, ties toward the higher control level). Result in canonical
// rule order.
std::vector<Rule> modified_apriori(const std::vector<Transaction>& transactions,
                                   double support, const MinerConfig& config);

// The multi-support sweep: modified_apriori at support i/n for
// i = 0..n_supports, results unioned with duplicates collapsed to the
// maximum observed support. Deterministic canonical ordering.
RuleSet generate_rules(const std::vector<Transaction>& transactions,
                       const MinerConfig& config, const WeightVector& weights);

}  // namespace convpriv
