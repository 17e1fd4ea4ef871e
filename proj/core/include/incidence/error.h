#pragma once

#include <stdexcept>
#include <string>

namespace incidence {

enum class Errc {
  ZeroVector,
  DimensionMismatch,
  KindMismatch,
  TooManyElements,
  TooFew,
  EmptyMeet,
  VanishingPairing,
  DuplicateParameter,
  DegreeExceedsBound,
  BadBasis,
  UnequalColorCounts,
  UnknownVertex,
  UnknownFace,
  WrongDegree,
  LabelMismatch,
  DegreeOverflow,
  IncidentLabel,
  BadPartition,
  NotQuadrilateral,
  DegenerateMeet,
  KernelNotOneDimensional,
  ZeroPolynomial,
  EmptyKernel,
  KernelDegenerate,
  DegenerateIntersection,
  SeedInvalid,
  BadParameters,
  NotQNet,
  CoincidentLines,
  NotQStarNet,
  SizeMismatch,
  UnsupportedDimension,
  Parse,
  Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace incidence
