#include "convpriv/extractors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace convpriv {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::string normalize_token(const std::string& raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && is_punct(raw[begin])) ++begin;
  while (end > begin && is_punct(raw[end - 1])) --end;
  std::string token;
  token.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    token.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
  }
  return token;
}

std::string concatenated_text(const ConversationRecord& record) {
  std::string text;
  for (const Utterance& u : record.utterances) {
    if (!text.empty()) text.push_back(' ');
    text += u.text;
  }
  return text;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) {
      std::string token = normalize_token(text.substr(start, i - start));
      if (!token.empty()) tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

std::size_t whitespace_token_count(const std::string& text) {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : text) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

void SentimentLexicon::validate() const {
  for (const auto& [token, valence] : entries) {
    if (token.empty()) {
      throw Error(Errc::InvariantViolation, "lexicon token is empty");
    }
    for (char c : token) {
      if (is_space(c) || is_punct(c) ||
          std::isupper(static_cast<unsigned char>(c))) {
        throw Error(Errc::InvariantViolation,
                    "lexicon token '" + token +
                        "' must be lowercase and punctuation-free");
      }
    }
    if (valence < -1.0 || valence > 1.0) {
      throw Error(Errc::InvariantViolation,
                  "valence for '" + token + "' outside [-1, 1]");
    }
  }
}

SentimentLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open lexicon " + path.string());
  }
  SentimentLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(Errc::ParseError,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected token<TAB>valence");
    }
    std::string token = line.substr(0, tab);
    double valence = 0.0;
    try {
      std::size_t used = 0;
      valence = std::stod(line.substr(tab + 1), &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError,
                  path.string() + ":" + std::to_string(line_no) +
                      ": bad valence for '" + token + "'");
    }
    lexicon.entries[token] = valence;
  }
  lexicon.validate();
  return lexicon;
}

void TopicTaxonomy::validate() const {
  if (min_hits == 0) {
    throw Error(Errc::InvariantViolation, "taxonomy min_hits must be >= 1");
  }
  for (const auto& [label, keywords] : labels) {
    if (label.empty()) {
      throw Error(Errc::InvariantViolation, "taxonomy label is empty");
    }
    if (keywords.empty()) {
      throw Error(Errc::InvariantViolation,
                  "taxonomy label '" + label + "' has no keywords");
    }
    for (const std::string& keyword : keywords) {
      if (tokenize(keyword).size() != 1) {
        throw Error(Errc::InvariantViolation,
                    "keyword '" + keyword + "' under '" + label +
                        "' must normalize to a single token");
      }
    }
  }
}

TopicTaxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open taxonomy " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  TopicTaxonomy taxonomy;
  try {
    taxonomy.min_hits = doc.at("min_hits").get<std::size_t>();
    for (const auto& [label, keywords] : doc.at("labels").items()) {
      std::set<std::string>& slot = taxonomy.labels[label];
      for (const auto& keyword : keywords) {
        slot.insert(tokenize(keyword.get<std::string>()).at(0));
      }
    }
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  taxonomy.validate();
  return taxonomy;
}

SentimentScore analyze_sentiment(const std::string& text,
                                 const SentimentLexicon& lexicon) {
  std::vector<std::string> tokens = tokenize(text);
  double valence_sum = 0.0;
  double abs_sum = 0.0;
  std::size_t matched = 0;
  for (const std::string& token : tokens) {
    auto it = lexicon.entries.find(token);
    if (it == lexicon.entries.end()) continue;
    valence_sum += it->second;
    abs_sum += std::fabs(it->second);
    ++matched;
  }
  SentimentScore s;
  s.score = valence_sum / static_cast<double>(std::max<std::size_t>(1, matched));
  s.magnitude =
      abs_sum / static_cast<double>(std::max<std::size_t>(1, tokens.size()));
  return s;
}

Sentiment quantize_sentiment(const SentimentScore& s) {
  if (s.magnitude < 0.05) return Sentiment::Neutral;
  if (s.score >= 0.25) return Sentiment::Positive;
  if (s.score >= 0.05) return Sentiment::SlightlyPositive;
  if (s.score > -0.05) return Sentiment::Neutral;
  if (s.score > -0.25) return Sentiment::SlightlyNegative;
  return Sentiment::Negative;
}

TopicLabel classify_topic(const std::string& text,
                          const TopicTaxonomy& taxonomy) {
  taxonomy.validate();
  std::vector<std::string> tokens = tokenize(text);
  std::optional<std::string> best;
  std::size_t best_hits = 0;
  for (const auto& [label, keywords] : taxonomy.labels) {
    std::size_t hits = 0;
    for (const std::string& token : tokens) {
      hits += keywords.count(token);
    }
    // Strict > plus the map's label order breaks ties lexicographically.
    if (hits > best_hits) {
      best = label;
      best_hits = hits;
    }
  }
  if (best && best_hits >= taxonomy.min_hits) return TopicLabel::of(*best);
  return TopicLabel::none();
}

DetailBucket measure_detail(const ConversationRecord& record) {
  std::size_t words = 0;
  for (const Utterance& u : record.utterances) {
    words += whitespace_token_count(u.text);
  }
  if (words == 0) {
    throw Error(Errc::EmptyTranscript,
                "scenario '" + record.id + "' has only blank utterances");
  }
  if (words < 40) return DetailBucket::Short;
  if (words <= 120) return DetailBucket::Medium;
  return DetailBucket::Long;
}

PeopleBucket count_listeners(const ConversationRecord& record) {
  std::set<std::string> speakers;
  for (const Utterance& u : record.utterances) {
    speakers.insert(u.speaker_id);
  }
  if (speakers.size() <= 2) return PeopleBucket::Few;
  if (speakers.size() <= 4) return PeopleBucket::Some;
  return PeopleBucket::Many;
}

RelationshipClass aggregate_relationship(
    const ContextInfo& context, std::optional<RelationshipClass> fallback) {
  if (context.relationships.empty()) {
    return fallback.value_or(RelationshipClass::Stranger);
  }
  RelationshipClass most_intimate = RelationshipClass::Stranger;
  for (const auto& [pair, rel] : context.relationships) {
    (void)pair;
    most_intimate = std::min(most_intimate, rel);
  }
  return most_intimate;
}

MetadataTuple extract_metadata(
    const ConversationRecord& record, const ExtractionResources& resources,
    std::optional<RelationshipClass> querier_relationship) {
  record.validate();
  MetadataTuple tuple;
  tuple.detail = measure_detail(record);  // rejects blank transcripts first
  const std::string text = concatenated_text(record);
  tuple.sentiment = quantize_sentiment(analyze_sentiment(text, resources.lexicon));
  tuple.topic = classify_topic(text, resources.taxonomy);
  tuple.location = record.context.location;
  tuple.relationship =
      aggregate_relationship(record.context, querier_relationship);
  tuple.people = count_listeners(record);
  tuple.privacy_phrase =
      detect_privacy_indication(record, resources.phrasebook).has_value();
  return tuple;
}

}  // namespace convpriv
