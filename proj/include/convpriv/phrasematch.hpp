#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "convpriv/core.hpp"

// Detects privacy-indication phrases ("don't tell anyone this") in
// transcripts via binary token-cosine similarity against a phrasebook.

namespace convpriv {

struct Phrasebook {
  std::vector<std::string> phrases;
  double threshold = 0.7;

  void validate() const;  // phrases non-empty, threshold in (0, 1]
};

// UTF-8 plain text, one phrase per line, `#` comments and blank lines
// ignored.
Phrasebook load_phrasebook(const std::filesystem::path& path,
                           double threshold = 0.7);

struct PhraseMatch {
  std::size_t utterance_index = 0;
  std::string phrase;
  double similarity = 0.0;
};

// Binary cosine over token sets: |A n B| / sqrt(|A|*|B|); 0 when either
// side has no tokens. Symmetric, range [0, 1], 1 iff equal non-empty sets.
double similarity(const std::string& a, const std::string& b);

// Best (utterance, phrase) pair at or above the phrasebook threshold;
// ties go to the lowest utterance index, then phrasebook order. Matching
// is per-utterance.
std::optional<PhraseMatch> detect_privacy_indication(
    const ConversationRecord& record, const Phrasebook& book);

}  // namespace convpriv
