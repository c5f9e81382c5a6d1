#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srpt {

// Stable error codes. The numeric values appear in CLI output and must not be
// renumbered.
enum class ErrorCode : int {
  InvalidSpec = 10,
  TopologyMismatch = 20,
  UnsupportedTopology = 21,
  NonSymplecticGenerator = 22,
  NoPhotonSector = 23,
  UnknownVariable = 24,
  ZeroJosephsonEnergy = 30,
  NonConvergence = 31,
  BasisNotConverged = 32,
  NotSuperradiantAtZeroT = 33,
  UnsupportedBias = 34,
  DimensionBudgetExceeded = 40,
  AbstractBlackBoxPresent = 41,
  UnconfinedMode = 42,
  ComplexAssemblyUnsupported = 43,
  EigensolverNotConverged = 44,
  TailBoundTooLoose = 45,
  QuadratureNotConverged = 46,
  ZeroFreeEnergy = 47,
  InvalidArgument = 50,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srpt
