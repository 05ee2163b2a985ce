#pragma once

#include <stdexcept>
#include <string>

namespace currentlab {

enum class Errc {
  SupportOutOfLattice,
  DimensionOverflow,
  DimensionMismatch,
  ConvergenceFailure,
  NotCharged,
  UnknownFamily,
  NonAdjacentBond,
  PeriodicFermionUnsupported,
  NotARing,
  BondVarianceExceeded,
  HorizonExceeded,
  HorizonNonpositive,
  IncompleteGrid,
  InsufficientData,
  TailTooHeavy,
  BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace currentlab
