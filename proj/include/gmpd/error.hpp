#pragma once

#include <stdexcept>
#include <string>

namespace gmpd {

enum class ErrorCode {
  InvalidInstance,
  IllegalPair,
  DuplicateVertex,
  WalkTooShort,
  AugmentedInput,
  HypothesisUnmet,
  Degenerate,
  NoFactor,
  NotSmd,
  NotSemicomplete,
  NotStrong,
  NotExtended,
  NotBipartite,
  NoSharedPartite,
  OneDirectional,
  PreconditionUnmet,
  TooLarge,
  CliqueViolation,
  ParseError,
  UnknownGenerator,
};

const char* error_code_name(ErrorCode code);

// `index` carries the 1-based position named by the error (pair index,
// piece index, file line); 0 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int index = 0)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  int index_;
};

}  // namespace gmpd
