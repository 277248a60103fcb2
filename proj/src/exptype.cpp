#include "dynlab/exptype.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynlab/error.hpp"

namespace dynlab {

namespace {

void check_cycle_for(const RationalBorel& b, const CauchyCycle& gamma) {
  for (const auto& p : b.poles()) {
    if (gamma.trace_distance(p.location()) < kTraceTol)
      throw Error(Errc::ContourTooClose, "contour passes within 1e-6 of a pole");
    if (gamma.winding_number(p.location()) != 1)
      throw Error(Errc::WindingMismatch, "a pole is not enclosed with winding number 1");
  }
}

void check_poles_in_domain(const RationalBorel& b, const HoloMap& phi) {
  for (const auto& p : b.poles()) {
    if (phi.needs_slit_plane() && distance_to_negative_axis(p.location()) < kTraceTol)
      throw Error(Errc::BranchViolation, "pole within 1e-6 of the branch cut");
    if (!phi.in_domain(p.location())) throw Error(Errc::BranchViolation, "pole outside the holomorphy domain");
  }
}

void check_branch(const RationalBorel& b, const HoloMap& phi, const CauchyCycle& gamma) {
  check_poles_in_domain(b, phi);
  if (phi.needs_slit_plane()) {
    for (const auto& xi : gamma.nodes())
      if (distance_to_negative_axis(xi) < kTraceTol)
        throw Error(Errc::BranchViolation, "contour within 1e-6 of the branch cut");
    // Cut points must not be enclosed by the cycle.
    for (const auto& c : gamma.circles()) {
      if (distance_to_negative_axis(c.center) >= c.radius) continue;
      const Complex nearest = c.center.real() <= 0 ? Complex{c.center.real(), 0} : Complex{0};
      if (gamma.winding_number(nearest) != 0)
        throw Error(Errc::BranchViolation, "cycle winds around the branch cut");
    }
    return;
  }
  if (std::holds_alternative<HoloMap::Sampled>(phi.kind())) {
    for (const auto& xi : gamma.nodes())
      if (!phi.in_domain(xi)) throw Error(Errc::BranchViolation, "contour leaves the declared holomorphy domain");
  }
}

Real binomial(std::size_t n, std::size_t k) {
  Real r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<Real>(n - k + i) / static_cast<Real>(i);
  return r;
}

std::vector<Real> top_quartile(const std::vector<Real>& radii) {
  if (radii.empty()) throw Error(Errc::InvalidArgument, "radii must be nonempty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) throw Error(Errc::InvalidArgument, "radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(Errc::InvalidArgument, "radii must be increasing");
  }
  const std::size_t keep = std::max<std::size_t>(1, (radii.size() + 3) / 4);
  return {radii.end() - static_cast<std::ptrdiff_t>(keep), radii.end()};
}

}  // namespace

RationalBorel borel_transform(const ExpPolynomial& f) {
  std::vector<BorelPole> poles;
  for (const auto& t : f.terms()) poles.push_back(BorelPole::from_scaled(t.frequency, t.coefficients));
  return RationalBorel(std::move(poles));
}

ExpPolynomial inverse_borel(const RationalBorel& b) {
  std::vector<ExpTerm> terms;
  for (const auto& p : b.poles()) terms.push_back({p.location(), p.scaled()});
  return ExpPolynomial(std::move(terms));
}

CauchyCycle auto_cycle(const RationalBorel& b, const HoloMap& phi, int nodes_per_circle) {
  const auto locations = b.pole_locations();
  std::function<Real(Complex)> clearance;
  if (phi.needs_slit_plane()) {
    for (const auto& a : locations)
      if (distance_to_negative_axis(a) < kCutClearance)
        throw Error(Errc::BranchViolation, "automatic contour needs poles at least 1e-3 from the branch cut");
    clearance = [](Complex a) { return distance_to_negative_axis(a); };
  }
  return CauchyCycle::around(locations, clearance, 1, nodes_per_circle);
}

Complex polya_eval(const RationalBorel& b, const CauchyCycle& gamma, Complex z) {
  if (b.empty()) return 0;
  check_cycle_for(b, gamma);
  return gamma.integrate([&](Complex xi) { return b(xi) * std::exp(xi * z); });
}

Complex polya_eval(const RationalBorel& b, Complex z) {
  if (b.empty()) return 0;
  return polya_eval(b, auto_cycle(b), z);
}

Complex phi_transform_eval(const RationalBorel& b, const HoloMap& phi, const CauchyCycle& gamma, Complex z) {
  if (b.empty()) return 0;
  check_branch(b, phi, gamma);
  check_cycle_for(b, gamma);
  return gamma.integrate([&](Complex xi) { return b(xi) * std::exp(phi(xi) * z); });
}

Complex phi_transform_eval(const RationalBorel& b, const HoloMap& phi, Complex z) {
  if (b.empty()) return 0;
  check_poles_in_domain(b, phi);
  return phi_transform_eval(b, phi, auto_cycle(b, phi), z);
}

RationalBorel phi_pushforward(const RationalBorel& b, const HoloMap& phi) {
  if (!b.all_simple())
    throw Error(Errc::UnsupportedPoleOrder, "pushforward needs simple poles; use phi_transform_eval");
  std::vector<BorelPole> out;
  check_poles_in_domain(b, phi);
  for (const auto& p : b.poles()) {
    out.push_back(BorelPole::from_scaled(phi(p.location()), {p.residue()}));
  }
  return RationalBorel(std::move(out));
}

ExpPolynomial apply_operator(const ExpPolynomial& f, const LinearOperator& op) {
  std::vector<ExpTerm> out;
  for (const auto& t : f.terms()) {
    const auto& c = t.coefficients;
    if (std::holds_alternative<Differentiation>(op)) {
      // (p e^{az})' = (a p + p') e^{az}
      std::vector<Complex> d(c.size(), Complex{0});
      for (std::size_t k = 0; k < c.size(); ++k) {
        d[k] += t.frequency * c[k];
        if (k > 0) d[k - 1] += static_cast<Real>(k) * c[k];
      }
      out.push_back({t.frequency, std::move(d)});
    } else if (const auto* tr = std::get_if<Translation>(&op)) {
      // p(z+h) e^{a(z+h)} = e^{ah} p(z+h) e^{az}
      const Complex scale = std::exp(t.frequency * tr->h);
      std::vector<Complex> d(c.size(), Complex{0});
      for (std::size_t j = 0; j < c.size(); ++j) {
        Complex hp{1};
        for (std::size_t k = j; k < c.size(); ++k) {
          d[j] += c[k] * binomial(k, j) * hp;
          hp *= tr->h;
        }
        d[j] *= scale;
      }
      out.push_back({t.frequency, std::move(d)});
    } else {
      out.push_back({t.frequency + std::get<Modulation>(op).alpha, c});
    }
  }
  return ExpPolynomial(std::move(out));
}

std::vector<RationalBorel> decompose_by_singularities(const RationalBorel& b, const std::vector<Region>& parts) {
  std::vector<std::vector<BorelPole>> buckets(parts.size());
  for (const auto& p : b.poles()) {
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const Region& r) { return r.contains(p.location(), kMembershipTol); });
    if (it == parts.end()) throw Error(Errc::UncoveredPole, "a pole lies in none of the regions");
    buckets[static_cast<std::size_t>(it - parts.begin())].push_back(p);
  }
  std::vector<RationalBorel> out;
  out.reserve(parts.size());
  for (auto& bucket : buckets) out.emplace_back(std::move(bucket));
  return out;
}

ConvexCompact conjugate_indicator_diagram(const ExpPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "K(0) is undefined");
  return ConvexCompact::hull(f.frequencies());
}

Real growth_estimate(const ExpPolynomial& f, const GrowthMode& mode, const std::vector<Real>& radii) {
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "growth of the zero function is undefined");
  const auto top = top_quartile(radii);
  Real best = -std::numeric_limits<Real>::infinity();
  for (Real r : top) {
    Real log_mod;
    if (const auto* ind = std::get_if<IndicatorMode>(&mode)) {
      log_mod = std::log(std::abs(f(std::polar(r, ind->theta))));
    } else {
      constexpr int kAngles = 720;
      log_mod = -std::numeric_limits<Real>::infinity();
      for (int k = 0; k < kAngles; ++k) {
        const Real theta = kTwoPi * static_cast<Real>(k) / kAngles;
        log_mod = std::max(log_mod, std::log(std::abs(f(std::polar(r, theta)))));
      }
    }
    best = std::max(best, log_mod / r);
  }
  return best;
}

Real exp_seminorm(const ExpPolynomial& f, const ConvexCompact& k, int n, Real sample_radius, SeminormGrid grid) {
  if (n <= 0) throw Error(Errc::InvalidArgument, "seminorm index must be positive");
  if (sample_radius < 10 * static_cast<Real>(n))
    throw Error(Errc::InvalidArgument, "sample_radius must be at least 10 n");
  for (const auto& alpha : f.frequencies())
    if (!k.contains(alpha, kMembershipTol))
      throw Error(Errc::TypeExceedsK, "a frequency lies outside K; the seminorm is infinite");
  if (f.is_zero()) return 0;

  Real best = 0;
  for (int i = 0; i <= grid.radial_nodes; ++i) {
    const Real r = sample_radius * static_cast<Real>(i) / static_cast<Real>(grid.radial_nodes);
    const int angles = i == 0 ? 1 : grid.angular_nodes;
    for (int j = 0; j < angles; ++j) {
      const Complex z = std::polar(r, kTwoPi * static_cast<Real>(j) / static_cast<Real>(grid.angular_nodes));
      const Real h = support_function(k, z);
      // each e^{alpha z - H_K(z)} has modulus <= 1, so nothing overflows
      Complex acc{0};
      for (const auto& t : f.terms()) acc += horner(t.coefficients, z) * std::exp(t.frequency * z - h);
      best = std::max(best, std::abs(acc) * std::exp(-r / static_cast<Real>(n)));
    }
  }
  return best;
}

}  // namespace dynlab
