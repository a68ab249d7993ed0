#include "convpriv/core.hpp"

#include <algorithm>
#include <array>

namespace convpriv {

namespace {

Error bad_name(const char* what, const std::string& name) {
  return Error(Errc::ParseError,
               std::string("unknown ") + what + " '" + name + "'");
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::EmptyTranscript: return "EmptyTranscript";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::MissingLabels: return "MissingLabels";
    case Errc::EmptyResponses: return "EmptyResponses";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadCount: return "BadCount";
    case Errc::UnlabeledScenario: return "UnlabeledScenario";
    case Errc::DuplicateScenarioId: return "DuplicateScenarioId";
    case Errc::UnknownConversation: return "UnknownConversation";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Error";
}

const std::string& to_string(ControlLevel level) {
  static const std::array<std::string, 3> names = {"low", "moderate", "high"};
  return names[static_cast<std::size_t>(level)];
}

ControlLevel control_level_from_string(const std::string& name) {
  for (ControlLevel level : kAllLevels) {
    if (to_string(level) == name) return level;
  }
  throw bad_name("control level", name);
}

const std::string& to_string(Sentiment s) {
  static const std::array<std::string, 5> names = {
      "negative", "slightly_negative", "neutral", "slightly_positive",
      "positive"};
  return names[static_cast<std::size_t>(s)];
}

Sentiment sentiment_from_string(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    auto s = static_cast<Sentiment>(i);
    if (to_string(s) == name) return s;
  }
  throw bad_name("sentiment class", name);
}

const std::string& to_string(RelationshipClass r) {
  static const std::array<std::string, 5> names = {
      "family", "close", "professional", "acquaintance", "stranger"};
  return names[static_cast<std::size_t>(r)];
}

RelationshipClass relationship_from_string(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    auto r = static_cast<RelationshipClass>(i);
    if (to_string(r) == name) return r;
  }
  throw bad_name("relationship class", name);
}

const std::string& to_string(LocationClass l) {
  static const std::array<std::string, 2> names = {"domestic", "non_domestic"};
  return names[static_cast<std::size_t>(l)];
}

LocationClass location_from_string(const std::string& name) {
  if (name == "domestic") return LocationClass::Domestic;
  if (name == "non_domestic") return LocationClass::NonDomestic;
  throw bad_name("location class", name);
}

const std::string& to_string(DetailBucket d) {
  static const std::array<std::string, 3> names = {"short", "medium", "long"};
  return names[static_cast<std::size_t>(d)];
}

DetailBucket detail_from_string(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    auto d = static_cast<DetailBucket>(i);
    if (to_string(d) == name) return d;
  }
  throw bad_name("detail bucket", name);
}

const std::string& to_string(PeopleBucket p) {
  static const std::array<std::string, 3> names = {"few", "some", "many"};
  return names[static_cast<std::size_t>(p)];
}

PeopleBucket people_from_string(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    auto p = static_cast<PeopleBucket>(i);
    if (to_string(p) == name) return p;
  }
  throw bad_name("people bucket", name);
}

const std::string& to_string(PvType pv) {
  static const std::array<std::string, 7> names = {"PV1", "PV2", "PV3", "PV4",
                                                   "PV5", "PV6", "PV7"};
  return names[static_cast<std::size_t>(pv) - 1];
}

PvType pv_type_from_string(const std::string& name) {
  for (int i = 1; i <= 7; ++i) {
    auto pv = static_cast<PvType>(i);
    if (to_string(pv) == name) return pv;
  }
  throw bad_name("privacy violation type", name);
}

std::string to_string(const TopicLabel& t) {
  return t.label.value_or("none");
}

TopicLabel topic_from_string(const std::string& name) {
  if (name == "none") return TopicLabel::none();
  return TopicLabel::of(name);
}

void ConversationRecord::validate() const {
  auto violation = [this](const std::string& field, const std::string& why) {
    return Error(Errc::InvariantViolation,
                 "scenario '" + id + "', field '" + field + "': " + why);
  };
  if (utterances.empty()) {
    throw violation("utterances", "must be non-empty");
  }
  for (const Utterance& u : utterances) {
    if (u.speaker_id.empty()) {
      throw violation("utterances", "speaker_id must be non-empty");
    }
    if (!context.participants.count(u.speaker_id)) {
      throw violation("participants",
                      "speaker '" + u.speaker_id + "' not listed");
    }
  }
  for (const auto& [pair, rel] : context.relationships) {
    (void)rel;
    if (!context.participants.count(pair.a) ||
        !context.participants.count(pair.b)) {
      throw violation("relationships",
                      "pair (" + pair.a + ", " + pair.b +
                          ") references unknown participant");
    }
  }
}

Item Item::parse(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 > text.size()) {
    throw Error(Errc::ParseError, "malformed item '" + text + "'");
  }
  return Item{text.substr(0, eq), text.substr(eq + 1)};
}

std::vector<Item> tuple_items(const MetadataTuple& tuple) {
  std::vector<Item> items = {
      {"sentiment", to_string(tuple.sentiment)},
      {"topic", to_string(tuple.topic)},
      {"location", to_string(tuple.location)},
      {"relationship", to_string(tuple.relationship)},
      {"detail", to_string(tuple.detail)},
      {"people", to_string(tuple.people)},
      {"privacy_phrase", tuple.privacy_phrase ? "true" : "false"},
  };
  std::sort(items.begin(), items.end());
  return items;
}

void Rule::validate() const {
  if (antecedent.empty()) {
    throw Error(Errc::InvariantViolation, "rule antecedent must be non-empty");
  }
  std::set<std::string> seen;
  for (const Item& item : antecedent) {
    if (item.attribute == "control") {
      throw Error(Errc::InvariantViolation,
                  "rule antecedent may not contain a control-level item");
    }
    if (!seen.insert(item.attribute).second) {
      throw Error(Errc::InvariantViolation,
                  "attribute '" + item.attribute +
                      "' appears twice in an antecedent");
    }
  }
  if (!std::is_sorted(antecedent.begin(), antecedent.end())) {
    throw Error(Errc::InvariantViolation, "rule antecedent must be sorted");
  }
  if (support < 0.0 || support > 1.0) {
    throw Error(Errc::InvariantViolation, "rule support outside [0,1]");
  }
  if (confidence < 0.0 || confidence > 1.0) {
    throw Error(Errc::InvariantViolation, "rule confidence outside [0,1]");
  }
}

bool rule_less(const Rule& lhs, const Rule& rhs) {
  if (lhs.antecedent.size() != rhs.antecedent.size()) {
    return lhs.antecedent.size() < rhs.antecedent.size();
  }
  if (lhs.antecedent != rhs.antecedent) {
    return lhs.antecedent < rhs.antecedent;
  }
  return lhs.consequent < rhs.consequent;
}

WeightVector WeightVector::uniform() {
  WeightVector w;
  for (const std::string& name : attribute_names()) {
    w.weights[name] = 1.0;
  }
  return w;
}

double WeightVector::weight_for(const std::string& attribute) const {
  auto it = weights.find(attribute);
  return it == weights.end() ? 1.0 : it->second;
}

void WeightVector::validate() const {
  bool any_positive = false;
  for (const auto& [name, value] : weights) {
    if (value < 0.0) {
      throw Error(Errc::InvariantViolation,
                  "weight for '" + name + "' is negative");
    }
    if (value > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw Error(Errc::InvariantViolation, "all weights are zero");
  }
}

void RuleSet::validate() const {
  weights.validate();
  std::set<std::pair<std::vector<Item>, ControlLevel>> seen;
  for (const Rule& rule : rules) {
    rule.validate();
    if (!seen.insert({rule.antecedent, rule.consequent}).second) {
      throw Error(Errc::InvariantViolation,
                  "duplicate (antecedent, consequent) pair in rule set");
    }
  }
}

double& ControlTally::at(ControlLevel level) {
  switch (level) {
    case ControlLevel::Low: return low;
    case ControlLevel::Moderate: return moderate;
    case ControlLevel::High: return high;
  }
  return high;
}

double ControlTally::at(ControlLevel level) const {
  return const_cast<ControlTally*>(this)->at(level);
}

}  // namespace convpriv
