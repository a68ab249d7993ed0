#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "convpriv/errors.hpp"

// Domain types shared by every module. Pure values, no I/O.

namespace convpriv {

// Severity-ordered disclosure control levels. Low < Moderate < High; the
// order is used for tie-breaking throughout.
enum class ControlLevel : std::uint8_t { Low = 0, Moderate = 1, High = 2 };

inline constexpr ControlLevel kAllLevels[] = {
    ControlLevel::Low, ControlLevel::Moderate, ControlLevel::High};
inline constexpr std::size_t kLevelCount = 3;

const std::string& to_string(ControlLevel level);
ControlLevel control_level_from_string(const std::string& name);

enum class Sentiment : std::uint8_t {
  Negative,
  SlightlyNegative,
  Neutral,
  SlightlyPositive,
  Positive,
};

const std::string& to_string(Sentiment s);
Sentiment sentiment_from_string(const std::string& name);

// Relationship vocabulary closed to five classes, ordered by intimacy
// (Family most intimate). Unknown pairs default to Stranger.
enum class RelationshipClass : std::uint8_t {
  Family = 0,
  Close = 1,
  Professional = 2,
  Acquaintance = 3,
  Stranger = 4,
};

const std::string& to_string(RelationshipClass r);
RelationshipClass relationship_from_string(const std::string& name);

enum class LocationClass : std::uint8_t { Domestic, NonDomestic };

const std::string& to_string(LocationClass l);
LocationClass location_from_string(const std::string& name);

enum class DetailBucket : std::uint8_t { Short, Medium, Long };

const std::string& to_string(DetailBucket d);
DetailBucket detail_from_string(const std::string& name);

enum class PeopleBucket : std::uint8_t { Few, Some, Many };

const std::string& to_string(PeopleBucket p);
PeopleBucket people_from_string(const std::string& name);

// Privacy-violation taxonomy; annotation vocabulary only, never used by
// inference.
enum class PvType : std::uint8_t { PV1 = 1, PV2, PV3, PV4, PV5, PV6, PV7 };

const std::string& to_string(PvType pv);
PvType pv_type_from_string(const std::string& name);

// A taxonomy label, or empty for "no topic established".
struct TopicLabel {
  std::optional<std::string> label;

  bool has_value() const { return label.has_value(); }
  static TopicLabel none() { return {}; }
  static TopicLabel of(std::string name) { return {std::move(name)}; }

  friend bool operator==(const TopicLabel&, const TopicLabel&) = default;
};

std::string to_string(const TopicLabel& t);
TopicLabel topic_from_string(const std::string& name);

struct Utterance {
  std::string speaker_id;
  std::string text;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// Unordered speaker pair; relationships are symmetric.
struct SpeakerPair {
  std::string a;
  std::string b;

  SpeakerPair() = default;
  SpeakerPair(std::string first, std::string second) {
    if (second < first) std::swap(first, second);
    a = std::move(first);
    b = std::move(second);
  }

  friend bool operator==(const SpeakerPair&, const SpeakerPair&) = default;
  friend auto operator<=>(const SpeakerPair&, const SpeakerPair&) = default;
};

struct ContextInfo {
  std::set<std::string> participants;
  std::map<SpeakerPair, RelationshipClass> relationships;
  LocationClass location = LocationClass::Domestic;
  std::optional<PvType> pv_type;

  friend bool operator==(const ContextInfo&, const ContextInfo&) = default;
};

struct ConversationRecord {
  std::string id;
  std::vector<Utterance> utterances;
  ContextInfo context;
  std::optional<std::int64_t> timestamp;

  // Throws InvariantViolation when the record breaks its type invariants:
  // non-empty utterances, non-empty speaker ids, every speaker listed in
  // context.participants, relationship keys referencing participants only.
  void validate() const;

  friend bool operator==(const ConversationRecord&,
                         const ConversationRecord&) = default;
};

// The 7-attribute context vector describing one conversation. Every
// attribute is always populated (an absent topic is the None value).
struct MetadataTuple {
  Sentiment sentiment = Sentiment::Neutral;
  TopicLabel topic;
  LocationClass location = LocationClass::Domestic;
  RelationshipClass relationship = RelationshipClass::Stranger;
  DetailBucket detail = DetailBucket::Short;
  PeopleBucket people = PeopleBucket::Few;
  bool privacy_phrase = false;

  friend bool operator==(const MetadataTuple&, const MetadataTuple&) = default;
};

// Canonical attribute names, in tuple field order. Items, rules, and the
// weight vector are keyed by these names.
inline const std::vector<std::string>& attribute_names() {
  static const std::vector<std::string> names = {
      "sentiment", "topic",  "location",       "relationship",
      "detail",    "people", "privacy_phrase"};
  return names;
}

// One antecedent element: a metadata attribute set to a concrete value.
struct Item {
  std::string attribute;
  std::string value;

  std::string str() const { return attribute + "=" + value; }
  static Item parse(const std::string& text);

  friend bool operator==(const Item&, const Item&) = default;
  friend auto operator<=>(const Item&, const Item&) = default;
};

// The tuple flattened to its seven attribute=value items, sorted.
std::vector<Item> tuple_items(const MetadataTuple& tuple);

struct Rule {
  std::vector<Item> antecedent;  // sorted, attribute-unique, non-empty
  ControlLevel consequent = ControlLevel::Low;
  double support = 0.0;
  double confidence = 0.0;

  void validate() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Canonical rule order: antecedent size, then item-wise lexicographic,
// then consequent severity.
bool rule_less(const Rule& lhs, const Rule& rhs);

struct WeightVector {
  std::map<std::string, double> weights;

  // 1.0 for each of the seven attributes.
  static WeightVector uniform();

  double weight_for(const std::string& attribute) const;
  void validate() const;  // all >= 0, at least one > 0

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct MinerProvenance {
  std::size_t n_supports = 0;
  double min_confidence = 0.5;
  std::size_t max_antecedent_size = 7;

  friend bool operator==(const MinerProvenance&,
                         const MinerProvenance&) = default;
};

struct RuleSet {
  std::vector<Rule> rules;  // canonical order, no duplicate (antecedent, consequent)
  WeightVector weights = WeightVector::uniform();
  std::uint64_t version = 1;
  MinerProvenance provenance;

  void validate() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Vote accumulator over the three control levels.
struct ControlTally {
  double low = 0.0;
  double moderate = 0.0;
  double high = 0.0;

  double& at(ControlLevel level);
  double at(ControlLevel level) const;

  friend bool operator==(const ControlTally&, const ControlTally&) = default;
};

}  // namespace convpriv
