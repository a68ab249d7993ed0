#include "convpriv/phrasematch.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "convpriv/extractors.hpp"

namespace convpriv {

void Phrasebook::validate() const {
  if (phrases.empty()) {
    throw Error(Errc::InvariantViolation, "phrasebook has no phrases");
  }
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(Errc::InvariantViolation,
                "phrasebook threshold must lie in (0, 1]");
  }
}

Phrasebook load_phrasebook(const std::filesystem::path& path,
                           double threshold) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open phrasebook " + path.string());
  }
  Phrasebook book;
  book.threshold = threshold;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    book.phrases.push_back(line.substr(first, last - first + 1));
  }
  book.validate();
  return book;
}

double similarity(const std::string& a, const std::string& b) {
  std::vector<std::string> ta = tokenize(a);
  std::vector<std::string> tb = tokenize(b);
  std::set<std::string> sa(ta.begin(), ta.end());
  std::set<std::string> sb(tb.begin(), tb.end());
  if (sa.empty() || sb.empty()) return 0.0;
  std::size_t shared = 0;
  for (const std::string& token : sa) {
    shared += sb.count(token);
  }
  return static_cast<double>(shared) /
         std::sqrt(static_cast<double>(sa.size()) *
                   static_cast<double>(sb.size()));
}

std::optional<PhraseMatch> detect_privacy_indication(
    const ConversationRecord& record, const Phrasebook& book) {
  book.validate();
  std::optional<PhraseMatch> best;
  for (std::size_t i = 0; i < record.utterances.size(); ++i) {
    for (const std::string& phrase : book.phrases) {
      double sim = similarity(record.utterances[i].text, phrase);
      // Strict > keeps the earliest utterance and phrasebook order on ties.
      if (!best || sim > best->similarity) {
        best = PhraseMatch{i, phrase, sim};
      }
    }
  }
  if (best && best->similarity >= book.threshold) return best;
  return std::nullopt;
}

}  // namespace convpriv
