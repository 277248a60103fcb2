#include "dynlab/error.hpp"

namespace dynlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ContourTooClose: return "ContourTooClose";
    case Errc::WindingMismatch: return "WindingMismatch";
    case Errc::BranchViolation: return "BranchViolation";
    case Errc::UnsupportedPoleOrder: return "UnsupportedPoleOrder";
    case Errc::UncoveredPole: return "UncoveredPole";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::EmptySet: return "EmptySet";
    case Errc::TypeExceedsK: return "TypeExceedsK";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::GridSearchExhausted: return "GridSearchExhausted";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::ZeroSign: return "ZeroSign";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotRealValued: return "NotRealValued";
    case Errc::InsideSpectralRadius: return "InsideSpectralRadius";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::Infeasible: return "Infeasible";
    case Errc::FunctionalVanishes: return "FunctionalVanishes";
    case Errc::ParseError: return "ParseError";
    case Errc::SpecViolation: return "SpecViolation";
  }
  return "Unknown";
}

}  // namespace dynlab
