#pragma once

#include <stdexcept>
#include <string>

namespace suzuki {

enum class Errc {
  InvalidArgument,
  ParseError,
  NotPrime,
  DegreeTooSmall,
  TrivialTheta,
  NotIrreducible,
  FieldTooLarge,
  ZeroParameter,
  NoSolution,
  NoValidZ,
  NoSquareRepresentative,
  ContextMismatch,
  ConductorMismatch,
  NotRationalInteger,
  Overflow,
  InexactDivision,
  OmittedCharacter,
  UnsupportedFamily,
  PreconditionViolated,
  EqualZ,
  BadPartition,
  NotDillonForm,
  TooLarge,
  SearchSpaceTooLarge,
  NonCentralSetForCharacterMethod,
  ParameterMismatch,
};

const char* errc_name(Errc code) noexcept;

// Every failure the library reports goes through this type; `code()` is the
// machine-readable part, `what()` carries the human context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace suzuki
