#pragma once

#include <stdexcept>
#include <string>

namespace fta {

enum class ErrorCode {
  // tree construction / validation
  kInvalidId,
  kDuplicateId,
  kUnknownReference,
  kCycle,
  kBadArity,
  // structure-function evaluation
  kIncompleteState,
  // probability arguments
  kOutOfRange,
  // cut sets / inclusion-exclusion
  kNonCoherent,
  kCutSetExplosion,
  kTooManyCutSets,
  kMissingEvent,
  // exhaustive oracle
  kEnumTooLarge,
  // text format
  kParse,
  kNandTildeOutsideNand,
  kNandMissingTilde,
};

const char* to_string(ErrorCode code);

/// Every library failure is thrown as Error. `line`/`column` are 1-based
/// positions into source text for errors raised while parsing; both are 0
/// when there is no associated location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0,
        int column = 0)
      : std::runtime_error(message), code_(code), line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace fta
