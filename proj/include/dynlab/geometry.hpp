#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

/// Convex compact set: a point, a closed disc, or a convex polygon whose
/// vertices are listed counterclockwise (two vertices describe a segment).
class ConvexCompact {
 public:
  struct Point {
    Complex at;
  };
  struct Disc {
    Complex center;
    Real radius;
  };
  struct Polygon {
    std::vector<Complex> vertices;
  };
  using Shape = std::variant<Point, Disc, Polygon>;

  static ConvexCompact point(Complex c);
  static ConvexCompact disc(Complex center, Real radius);
  /// Vertices must be in convex position and counterclockwise; a single
  /// vertex collapses to a point.
  static ConvexCompact polygon(std::vector<Complex> vertices);
  /// Convex hull of an arbitrary finite set (monotone chain).
  static ConvexCompact hull(std::vector<Complex> points);

  const Shape& shape() const noexcept { return shape_; }
  bool is_point() const noexcept { return std::holds_alternative<Point>(shape_); }

  bool contains(Complex z, Real tol = kMembershipTol) const;
  /// Largest |z| over the set.
  Real max_modulus() const;

 private:
  explicit ConvexCompact(Shape s) : shape_(std::move(s)) {}
  Shape shape_;
};

/// {z : r_inner <= |z| <= r_outer, arg z in [theta_lo, theta_hi]} around the origin.
struct AnnulusSector {
  Real r_inner = 0;
  Real r_outer = 1;
  Real theta_lo = 0;
  Real theta_hi = kTwoPi;

  bool contains(Complex z, Real tol = kMembershipTol) const;
  bool is_point() const { return r_inner == r_outer && theta_lo == theta_hi; }
};

/// Membership predicate with a human-readable label.
struct PredicateRegion {
  std::function<bool(Complex)> member;
  std::string label;
};

/// Region used for pole assignment and holomorphy domains.
class Region {
 public:
  using Kind = std::variant<ConvexCompact, AnnulusSector, PredicateRegion>;

  Region(ConvexCompact k) : kind_(std::move(k)) {}
  Region(AnnulusSector a) : kind_(a) {}
  Region(PredicateRegion p) : kind_(std::move(p)) {}

  static Region whole_plane();
  /// C minus (-inf, 0], the domain of the principal logarithm.
  static Region slit_plane();

  const Kind& kind() const noexcept { return kind_; }
  bool contains(Complex z, Real tol = kMembershipTol) const;

 private:
  Kind kind_;
};

/// Distance from z to the ray (-inf, 0].
Real distance_to_negative_axis(Complex z);

/// Support function H_K(z) = sup { Re(z u) : u in K }.
Real support_function(const ConvexCompact& k, Complex z);

}  // namespace dynlab
