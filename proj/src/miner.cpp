#include "convpriv/miner.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace convpriv {

namespace {

using IdSet = std::vector<int>;  // sorted item ids

struct InternedCorpus {
  std::vector<Item> items;          // id -> item, lexicographically sorted
  std::vector<IdSet> transactions;  // each sorted
};

InternedCorpus intern(const std::vector<Transaction>& transactions) {
  std::set<Item> universe;
  for (const Transaction& t : transactions) {
    for (const Item& item : t.items) universe.insert(item);
    if (t.label) universe.insert({kLabelAttribute, to_string(*t.label)});
  }
  InternedCorpus corpus;
  corpus.items.assign(universe.begin(), universe.end());
  auto id_of = [&corpus](const Item& item) {
    return static_cast<int>(std::lower_bound(corpus.items.begin(),
                                             corpus.items.end(), item) -
                            corpus.items.begin());
  };
  corpus.transactions.reserve(transactions.size());
  for (const Transaction& t : transactions) {
    IdSet ids;
    ids.reserve(t.items.size() + 1);
    for (const Item& item : t.items) ids.push_back(id_of(item));
    if (t.label) ids.push_back(id_of({kLabelAttribute, to_string(*t.label)}));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    corpus.transactions.push_back(std::move(ids));
  }
  return corpus;
}

bool contains_all(const IdSet& transaction, const IdSet& itemset) {
  return std::includes(transaction.begin(), transaction.end(),
                       itemset.begin(), itemset.end());
}

std::size_t count_support(const InternedCorpus& corpus, const IdSet& itemset) {
  std::size_t count = 0;
  for (const IdSet& t : corpus.transactions) {
    if (contains_all(t, itemset)) ++count;
  }
  return count;
}

std::size_t min_count_for(double support, std::size_t n) {
  // The 1e-9 slack absorbs rounding in sweep supports of the form i/n.
  double raw = std::ceil(support * static_cast<double>(n) - 1e-9);
  if (raw < 1.0) return 1;
  return static_cast<std::size_t>(raw);
}

// Level-wise apriori over the interned corpus. Returns every frequent
// itemset of size 1..max_size with its count.
std::map<IdSet, std::size_t> frequent_counts(const InternedCorpus& corpus,
                                             std::size_t min_count,
                                             std::size_t max_size) {
  std::map<IdSet, std::size_t> result;
  if (min_count > corpus.transactions.size() || max_size == 0) return result;

  std::vector<std::size_t> item_counts(corpus.items.size(), 0);
  for (const IdSet& t : corpus.transactions) {
    for (int id : t) ++item_counts[static_cast<std::size_t>(id)];
  }
  std::vector<IdSet> level;
  for (std::size_t id = 0; id < corpus.items.size(); ++id) {
    if (item_counts[id] >= min_count) {
      IdSet single{static_cast<int>(id)};
      result[single] = item_counts[id];
      level.push_back(std::move(single));
    }
  }

  for (std::size_t k = 2; k <= max_size && level.size() > 1; ++k) {
    std::set<IdSet> previous(level.begin(), level.end());
    std::vector<IdSet> next;
    // level is lexicographically sorted, so join partners share a prefix
    // block of k-2 items.
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (!std::equal(level[i].begin(), level[i].end() - 1,
                        level[j].begin(), level[j].end() - 1)) {
          break;  // past the shared-prefix block
        }
        IdSet candidate = level[i];
        candidate.push_back(level[j].back());
        // Downward closure prune: every (k-1)-subset must be frequent.
        bool all_frequent = true;
        IdSet subset(candidate.begin() + 1, candidate.end());
        for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
          if (drop > 0) subset[drop - 1] = candidate[drop - 1];
          if (!previous.count(subset)) {
            all_frequent = false;
            break;
          }
        }
        if (!all_frequent) continue;
        std::size_t count = count_support(corpus, candidate);
        if (count >= min_count) {
          result[candidate] = count;
          next.push_back(std::move(candidate));
        }
      }
    }
    level = std::move(next);
  }
  return result;
}

Itemset externalize(const InternedCorpus& corpus, const IdSet& ids) {
  Itemset items;
  items.reserve(ids.size());
  for (int id : ids) items.push_back(corpus.items[static_cast<std::size_t>(id)]);
  return items;
}

void require_nonempty(const std::vector<Transaction>& transactions) {
  if (transactions.empty()) {
    throw Error(Errc::EmptyCorpus, "no transactions to mine");
  }
}

}  // namespace

Transaction Transaction::from_tuple(const MetadataTuple& tuple,
                                    ControlLevel label) {
  return Transaction{tuple_items(tuple), label};
}

std::map<Itemset, double> mine_frequent_itemsets(
    const std::vector<Transaction>& transactions, double support) {
  require_nonempty(transactions);
  InternedCorpus corpus = intern(transactions);
  const std::size_t n = transactions.size();
  std::size_t max_size = 0;
  for (const IdSet& t : corpus.transactions) {
    max_size = std::max(max_size, t.size());
  }
  auto counts = frequent_counts(corpus, min_count_for(support, n), max_size);
  std::map<Itemset, double> result;
  for (const auto& [ids, count] : counts) {
    result[externalize(corpus, ids)] =
        static_cast<double>(count) / static_cast<double>(n);
  }
  return result;
}

std::vector<Rule> modified_apriori(const std::vector<Transaction>& transactions,
                                   double support, const MinerConfig& config) {
  require_nonempty(transactions);
  for (const Transaction& t : transactions) {
    if (!t.label) {
      throw Error(Errc::MissingLabels, "transaction without a control label");
    }
  }
  InternedCorpus corpus = intern(transactions);
  const std::size_t n = transactions.size();

  // Label item ids; the interned order puts them in one contiguous range
  // but a set keeps the check obvious.
  std::set<int> label_ids;
  for (std::size_t id = 0; id < corpus.items.size(); ++id) {
    if (corpus.items[id].attribute == kLabelAttribute) {
      label_ids.insert(static_cast<int>(id));
    }
  }

  auto counts = frequent_counts(corpus, min_count_for(support, n),
                                config.max_antecedent_size + 1);

  // Best rule per antecedent: highest confidence, ties toward the higher
  // control level.
  std::map<IdSet, Rule> best;
  for (const auto& [ids, count] : counts) {
    IdSet antecedent_ids;
    std::optional<ControlLevel> consequent;
    bool multiple_labels = false;
    for (int id : ids) {
      if (label_ids.count(id)) {
        if (consequent) {
          multiple_labels = true;
          break;
        }
        consequent = control_level_from_string(
            corpus.items[static_cast<std::size_t>(id)].value);
      } else {
        antecedent_ids.push_back(id);
      }
    }
    if (multiple_labels || !consequent || antecedent_ids.empty()) continue;
    if (antecedent_ids.size() > config.max_antecedent_size) continue;

    auto antecedent_count = counts.find(antecedent_ids);
    // Present by downward closure; guard against impossible lookup misses.
    if (antecedent_count == counts.end()) continue;
    double confidence = static_cast<double>(count) /
                        static_cast<double>(antecedent_count->second);
    if (confidence < config.min_confidence) continue;

    Rule rule;
    rule.antecedent = externalize(corpus, antecedent_ids);
    rule.consequent = *consequent;
    rule.support = static_cast<double>(count) / static_cast<double>(n);
    rule.confidence = confidence;

    auto [slot, inserted] = best.try_emplace(antecedent_ids, rule);
    if (!inserted) {
      const Rule& held = slot->second;
      if (confidence > held.confidence ||
          (confidence == held.confidence && rule.consequent > held.consequent)) {
        slot->second = rule;
      }
    }
  }

  std::vector<Rule> rules;
  rules.reserve(best.size());
  for (auto& [ids, rule] : best) {
    (void)ids;
    rules.push_back(std::move(rule));
  }
  std::sort(rules.begin(), rules.end(), rule_less);
  return rules;
}

RuleSet generate_rules(const std::vector<Transaction>& transactions,
                       const MinerConfig& config, const WeightVector& weights) {
  weights.validate();
  require_nonempty(transactions);
  const double n = static_cast<double>(transactions.size());

  std::map<std::pair<Itemset, ControlLevel>, Rule> merged;
  for (std::size_t i = 0; i <= config.n_supports; ++i) {
    double support = static_cast<double>(i) / n;
    for (Rule& rule : modified_apriori(transactions, support, config)) {
      auto key = std::make_pair(rule.antecedent, rule.consequent);
      auto [slot, inserted] = merged.try_emplace(key, rule);
      if (!inserted && rule.support > slot->second.support) {
        slot->second = rule;
      }
    }
  }

  RuleSet ruleset;
  ruleset.rules.reserve(merged.size());
  for (auto& [key, rule] : merged) {
    (void)key;
    ruleset.rules.push_back(std::move(rule));
  }
  std::sort(ruleset.rules.begin(), ruleset.rules.end(), rule_less);
  ruleset.weights = weights;
  ruleset.version = 1;
  ruleset.provenance = {config.n_supports, config.min_confidence,
                        config.max_antecedent_size};
  return ruleset;
}

}  // namespace convpriv
