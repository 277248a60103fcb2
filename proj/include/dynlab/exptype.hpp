#pragma once

#include <variant>
#include <vector>

#include "dynlab/contour.hpp"
#include "dynlab/exp_polynomial.hpp"
#include "dynlab/geometry.hpp"
#include "dynlab/holomap.hpp"
#include "dynlab/rational_borel.hpp"

namespace dynlab {

/// Bo f(z) = sum_n f^(n)(0) / z^{n+1}; z^k e^{a z} maps to k!/(z-a)^{k+1}.
RationalBorel borel_transform(const ExpPolynomial& f);

/// Residue evaluation of the Polya integral: c/(z-a)^nu -> c z^{nu-1} e^{a z}/(nu-1)!.
ExpPolynomial inverse_borel(const RationalBorel& b);

/// Cycle enclosing every pole of b once, clear of the cut when phi needs one.
CauchyCycle auto_cycle(const RationalBorel& b, const HoloMap& phi = HoloMap::identity(),
                       int nodes_per_circle = kDefaultNodes);

/// Trapezoid quadrature of (1/2 pi i) \oint_Gamma B(xi) e^{xi z} d xi.
Complex polya_eval(const RationalBorel& b, const CauchyCycle& gamma, Complex z);
Complex polya_eval(const RationalBorel& b, Complex z);

/// Quadrature of Phi_phi f(z) = (1/2 pi i) \oint_Gamma B(xi) e^{phi(xi) z} d xi.
Complex phi_transform_eval(const RationalBorel& b, const HoloMap& phi, const CauchyCycle& gamma, Complex z);
Complex phi_transform_eval(const RationalBorel& b, const HoloMap& phi, Complex z);

/// Borel transform of Phi_phi f for simple-pole b: residue r at a moves to phi(a).
RationalBorel phi_pushforward(const RationalBorel& b, const HoloMap& phi);

struct Differentiation {};
struct Translation {
  Complex h;
};
struct Modulation {
  Complex alpha;
};
using LinearOperator = std::variant<Differentiation, Translation, Modulation>;

ExpPolynomial apply_operator(const ExpPolynomial& f, const LinearOperator& op);

/// Split b into parts whose poles lie in parts[j]; a pole covered by several
/// regions goes to the lowest index.
std::vector<RationalBorel> decompose_by_singularities(const RationalBorel& b, const std::vector<Region>& parts);

/// K(f): convex hull of the frequency set.
ConvexCompact conjugate_indicator_diagram(const ExpPolynomial& f);

struct TypeMode {};
struct IndicatorMode {
  Real theta;
};
using GrowthMode = std::variant<TypeMode, IndicatorMode>;

/// limsup proxy: max over the top quartile of radii of log|f|/r (along the ray
/// for the indicator, log of the sampled circle maximum for the type).
Real growth_estimate(const ExpPolynomial& f, const GrowthMode& mode, const std::vector<Real>& radii);

struct SeminormGrid {
  int radial_nodes = 400;
  int angular_nodes = 256;
};

/// sup |f(z)| e^{-H_K(z) - |z|/n} over a polar grid on |z| <= sample_radius.
Real exp_seminorm(const ExpPolynomial& f, const ConvexCompact& k, int n, Real sample_radius,
                  SeminormGrid grid = {});

}  // namespace dynlab
