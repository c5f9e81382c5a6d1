#include "srpt/errors.hpp"

namespace srpt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::TopologyMismatch: return "TopologyMismatch";
    case ErrorCode::UnsupportedTopology: return "UnsupportedTopology";
    case ErrorCode::NonSymplecticGenerator: return "NonSymplecticGenerator";
    case ErrorCode::NoPhotonSector: return "NoPhotonSector";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroJosephsonEnergy: return "ZeroJosephsonEnergy";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BasisNotConverged: return "BasisNotConverged";
    case ErrorCode::NotSuperradiantAtZeroT: return "NotSuperradiantAtZeroT";
    case ErrorCode::UnsupportedBias: return "UnsupportedBias";
    case ErrorCode::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case ErrorCode::AbstractBlackBoxPresent: return "AbstractBlackBoxPresent";
    case ErrorCode::UnconfinedMode: return "UnconfinedMode";
    case ErrorCode::ComplexAssemblyUnsupported: return "ComplexAssemblyUnsupported";
    case ErrorCode::EigensolverNotConverged: return "EigensolverNotConverged";
    case ErrorCode::TailBoundTooLoose: return "TailBoundTooLoose";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::ZeroFreeEnergy: return "ZeroFreeEnergy";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace srpt
