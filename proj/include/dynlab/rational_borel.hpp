#pragma once

#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

/// Pole of a rational function with principal part sum_nu c_nu / (z - a)^nu.
///
/// Coefficients are held as c_nu / (nu-1)!, the scaling in which a Borel
/// transform pole and its exponential-polynomial term share the same numbers;
/// this keeps both Borel round trips bit-exact.
class BorelPole {
 public:
  BorelPole(Complex location, std::vector<Complex> principal);
  static BorelPole from_scaled(Complex location, std::vector<Complex> scaled);

  Complex location() const noexcept { return location_; }
  std::size_t order() const noexcept { return scaled_.size(); }
  /// c_1 .. c_k (index 0 holds c_1).
  std::vector<Complex> principal() const;
  const std::vector<Complex>& scaled() const noexcept { return scaled_; }
  Complex residue() const { return scaled_.empty() ? Complex{0} : scaled_.front(); }

  Complex operator()(Complex z) const;

  bool operator==(const BorelPole&) const = default;

 private:
  BorelPole() = default;
  Complex location_{};
  std::vector<Complex> scaled_;

  friend class RationalBorel;
};

/// Rational function vanishing at infinity, stored as poles with principal parts.
class RationalBorel {
 public:
  RationalBorel() = default;
  explicit RationalBorel(std::vector<BorelPole> poles);

  const std::vector<BorelPole>& poles() const noexcept { return poles_; }
  bool empty() const noexcept { return poles_.empty(); }
  std::vector<Complex> pole_locations() const;
  bool all_simple() const;

  Complex operator()(Complex z) const;

  /// Laurent coefficients at infinity: B(z) = sum_n a_n z^{-(n+1)}.
  std::vector<Complex> laurent_at_infinity(std::size_t count) const;

  RationalBorel operator+(const RationalBorel& other) const;

  bool operator==(const RationalBorel&) const = default;

 private:
  std::vector<BorelPole> poles_;
};

}  // namespace dynlab
