#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "dynlab/geometry.hpp"
#include "dynlab/types.hpp"

namespace dynlab {

/// Holomorphic map phi used by the Phi_phi transform.
class HoloMap {
 public:
  struct Affine {
    Complex a;
    Complex b;
  };  // xi -> a + b xi
  struct PrincipalLog {};
  struct PrincipalPower {
    Real exponent;
  };  // xi -> exp(exponent * Log xi); entire for nonnegative integer exponents
  struct Sampled {
    std::function<Complex(Complex)> fn;
    Region domain;
  };
  using Kind = std::variant<Affine, PrincipalLog, PrincipalPower, Sampled>;

  static HoloMap affine(Complex a, Complex b) { return HoloMap(Affine{a, b}); }
  static HoloMap identity() { return affine(0, 1); }
  static HoloMap principal_log() { return HoloMap(PrincipalLog{}); }
  static HoloMap principal_power(Real n) { return HoloMap(PrincipalPower{n}); }
  static HoloMap sampled(std::function<Complex(Complex)> fn, Region domain) {
    return HoloMap(Sampled{std::move(fn), std::move(domain)});
  }

  const Kind& kind() const noexcept { return kind_; }

  Complex operator()(Complex xi) const;

  /// True when holomorphy requires avoiding the cut (-inf, 0].
  bool needs_slit_plane() const;
  /// Distance from xi to the boundary of the holomorphy domain when known
  /// (infinity for entire maps, nullopt for sampled maps).
  std::optional<Real> clearance(Complex xi) const;
  /// Whether xi lies in the declared holomorphy domain.
  bool in_domain(Complex xi) const;

 private:
  explicit HoloMap(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

}  // namespace dynlab
