#pragma once

#include <stdexcept>
#include <string>

namespace superds {

enum class ErrorKind {
  Parse,
  UnsupportedType,
  RankOutOfRange,
  ImaginaryRoot,
  NotARoot,
  NotSimpleIsotropic,
  DimensionMismatch,
  GroupTooLarge,
  BoxTooLarge,
  NotSquareZero,
  NotOdd,
  DoesNotCommute,
  RelationViolated,
  NotInvariant,
  ParityOfIndex,
  NotDominant,
  KWFails,
  NotOrthogonal,
};

const char* to_string(ErrorKind k);

// Every precondition failure in the library surfaces as this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace superds
