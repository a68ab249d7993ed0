#pragma once

#include <stdexcept>
#include <string>

namespace convpriv {

enum class Errc {
  ParseError,
  InvariantViolation,
  EmptyTranscript,
  EmptyCorpus,
  MissingLabels,
  EmptyResponses,
  OutOfRange,
  BadCount,
  UnlabeledScenario,
  DuplicateScenarioId,
  UnknownConversation,
  BadConfig,
};

const char* errc_name(Errc code);

// Single exception type for every module; the code tells callers (and the
// CLI's exit path) which contract failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace convpriv
