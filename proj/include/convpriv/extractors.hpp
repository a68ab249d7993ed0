#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "convpriv/core.hpp"
#include "convpriv/phrasematch.hpp"

// Turns a ConversationRecord into a MetadataTuple: lexicon sentiment,
// keyword topic classification, word-count detail, speaker-tag counting,
// and phrasebook privacy detection.

namespace convpriv {

// Lowercase, split on whitespace, strip leading/trailing punctuation.
// Tokens that strip to nothing are dropped.
std::vector<std::string> tokenize(const std::string& text);

// Count of whitespace-delimited chunks, no normalization.
std::size_t whitespace_token_count(const std::string& text);

struct SentimentLexicon {
  std::map<std::string, double> entries;  // token -> valence in [-1, 1]

  void validate() const;
};

// TSV, `token<TAB>valence`, UTF-8, one entry per line. Blank lines and
// `#` comments ignored.
SentimentLexicon load_lexicon(const std::filesystem::path& path);

struct TopicTaxonomy {
  std::map<std::string, std::set<std::string>> labels;  // label -> keywords
  std::size_t min_hits = 1;

  void validate() const;
};

// JSON: {"min_hits": n, "labels": {label: [keyword, ...], ...}}.
TopicTaxonomy load_taxonomy(const std::filesystem::path& path);

struct SentimentScore {
  double score = 0.0;      // [-1, 1]
  double magnitude = 0.0;  // >= 0
};

// score    = sum of matched valences / max(1, #matched tokens)
// magnitude = sum of |matched valences| / max(1, #tokens)
SentimentScore analyze_sentiment(const std::string& text,
                                 const SentimentLexicon& lexicon);

Sentiment quantize_sentiment(const SentimentScore& s);

// Label with the maximum keyword-hit count when that count reaches
// min_hits; ties go to the lexicographically smallest label.
TopicLabel classify_topic(const std::string& text,
                          const TopicTaxonomy& taxonomy);

// Buckets by total whitespace-token count: <40 Short, 40..120 Medium,
// >120 Long. Throws EmptyTranscript when every utterance is blank.
DetailBucket measure_detail(const ConversationRecord& record);

// Buckets by distinct speaker count: <=2 Few, 3..4 Some, >=5 Many.
PeopleBucket count_listeners(const ConversationRecord& record);

// Conversation-level relationship: the most intimate class among the
// pairs present in context; falls back to `fallback` (then Stranger)
// when the context lists no pairs.
RelationshipClass aggregate_relationship(
    const ContextInfo& context,
    std::optional<RelationshipClass> fallback = std::nullopt);

struct ExtractionResources {
  SentimentLexicon lexicon;
  TopicTaxonomy taxonomy;
  Phrasebook phrasebook;
};

MetadataTuple extract_metadata(
    const ConversationRecord& record, const ExtractionResources& resources,
    std::optional<RelationshipClass> querier_relationship = std::nullopt);

}  // namespace convpriv
