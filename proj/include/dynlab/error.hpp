#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynlab {

enum class Errc {
  InvalidArgument,
  // exponential-type core
  ContourTooClose,
  WindingMismatch,
  BranchViolation,
  UnsupportedPoleOrder,
  UncoveredPole,
  ZeroFunction,
  EmptySet,
  TypeExceedsK,
  // Diophantine search
  InvalidEpsilon,
  GridSearchExhausted,
  SearchSpaceTooLarge,
  // density / zero counting
  ZeroSign,
  PreconditionViolated,
  NotRealValued,
  // resolvent
  InsideSpectralRadius,
  SingularSystem,
  EnumerationCapExceeded,
  Infeasible,
  FunctionalVanishes,
  // gate
  ParseError,
  SpecViolation,
};

std::string_view errc_name(Errc code);

/// Contract violations are bugs in this library, not bad input.
constexpr bool is_contract_violation(Errc code) { return code == Errc::Infeasible; }

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the zero-based byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dynlab
