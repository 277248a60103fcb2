#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

struct Circle {
  Complex center;
  Real radius;
  int winding = 1;
};

/// Finite union of oriented circles, integrated with the trapezoid rule.
class CauchyCycle {
 public:
  explicit CauchyCycle(std::vector<Circle> circles, int nodes_per_circle = kDefaultNodes);

  /// One circle per point with radius half the distance to the nearest other
  /// point or excluded singularity, capped at max_radius. `clearance` returns
  /// the distance from a point to the excluded set (infinity when none).
  static CauchyCycle around(std::span<const Complex> points,
                            const std::function<Real(Complex)>& clearance = {},
                            Real max_radius = 1, int nodes_per_circle = kDefaultNodes);

  const std::vector<Circle>& circles() const noexcept { return circles_; }
  int nodes_per_circle() const noexcept { return nodes_; }

  /// (1 / 2 pi i) \oint g(xi) d xi over the cycle.
  Complex integrate(const std::function<Complex(Complex)>& g) const;

  /// Winding number from geometry (sum over circles enclosing u).
  int winding_number(Complex u) const;
  /// ind_Gamma(u) evaluated by quadrature.
  Complex index(Complex u) const;

  /// Minimum distance from the trace to u.
  Real trace_distance(Complex u) const;
  /// Every quadrature node, circle by circle, in integration order.
  std::vector<Complex> nodes() const;

 private:
  std::vector<Circle> circles_;
  int nodes_;
};

}  // namespace dynlab
