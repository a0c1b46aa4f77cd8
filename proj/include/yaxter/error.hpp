#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace yaxter {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NoConvergence,
  BondOutOfRange,
  SiteOutOfRange,
  InvalidEpsilon,
  DegenerateQ,
  ZeroSpectral,
  ThetaOutOfDomain,
  NormalizationSingular,
  SingularDenominator,
  UnsupportedParametrization,
  StepTooSmall,
  DegenerateBand,
  GapClosed,
  NotNormalized,
  OutOfRange,
  UndefinedRotation,
  StepsTooFew,
  NormDrift,
  NotCyclic,
  BadParams,
  UnknownFamily,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace yaxter
