#pragma once

#include <stdexcept>
#include <string>

namespace nlsa {

enum class ErrorCode {
  Parse,
  DimensionMismatch,
  AmbientMismatch,
  NotHomogeneous,
  ArityMismatch,
  NotAnIdeal,
  NotAbelianIdeal,
  NotASection,
  InvalidRepresentation,
  NotACocycle,
  WrongParity,
  NotWedgeCompatible,
  NotCyclic,
  OddDimension,
  EvenDimension,
  WrongDimension,
  NotIsotropic,
  NotIsotropicIdeal,
  NotNilpotent,
  NonSquareScalar,
  DivisionByZero,
  UnknownName,
  AxiomFailure,
};

[[nodiscard]] const char* to_string(ErrorCode code);

/// Every failure the library raises. Mathematical property failures that are
/// part of a report (axiom checks and the like) are never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlsa
