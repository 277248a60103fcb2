#include "dynlab/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynlab/error.hpp"

namespace dynlab {

CauchyCycle::CauchyCycle(std::vector<Circle> circles, int nodes_per_circle)
    : circles_(std::move(circles)), nodes_(nodes_per_circle) {
  if (nodes_ <= 0) throw Error(Errc::InvalidArgument, "nodes_per_circle must be positive");
  for (const auto& c : circles_)
    if (!(c.radius > 0)) throw Error(Errc::InvalidArgument, "circle radius must be positive");
}

CauchyCycle CauchyCycle::around(std::span<const Complex> points,
                                const std::function<Real(Complex)>& clearance, Real max_radius,
                                int nodes_per_circle) {
  std::vector<Circle> circles;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Real nearest = std::numeric_limits<Real>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) nearest = std::min(nearest, std::abs(points[i] - points[j]));
    if (clearance) nearest = std::min(nearest, clearance(points[i]));
    circles.push_back({points[i], std::min(max_radius, nearest / 2), 1});
  }
  return CauchyCycle(std::move(circles), nodes_per_circle);
}

Complex CauchyCycle::integrate(const std::function<Complex(Complex)>& g) const {
  // On xi = c + r e^{i theta}: (1/2 pi i) d xi = (xi - c) d theta / (2 pi), so the
  // trapezoid rule reduces to the mean of g(xi)(xi - c) over equispaced nodes.
  Complex total{0};
  for (const auto& c : circles_) {
    Complex sum{0};
    for (int k = 0; k < nodes_; ++k) {
      const Real theta = kTwoPi * static_cast<Real>(k) / static_cast<Real>(nodes_);
      const Complex offset = std::polar(c.radius, theta);
      sum += g(c.center + offset) * offset;
    }
    total += static_cast<Real>(c.winding) * sum / static_cast<Real>(nodes_);
  }
  return total;
}

int CauchyCycle::winding_number(Complex u) const {
  int w = 0;
  for (const auto& c : circles_)
    if (std::abs(u - c.center) < c.radius) w += c.winding;
  return w;
}

Complex CauchyCycle::index(Complex u) const {
  return integrate([u](Complex xi) { return Complex{1} / (xi - u); });
}

Real CauchyCycle::trace_distance(Complex u) const {
  Real d = std::numeric_limits<Real>::infinity();
  for (const auto& c : circles_) d = std::min(d, std::abs(std::abs(u - c.center) - c.radius));
  return d;
}

std::vector<Complex> CauchyCycle::nodes() const {
  std::vector<Complex> out;
  out.reserve(circles_.size() * static_cast<std::size_t>(nodes_));
  for (const auto& c : circles_)
    for (int k = 0; k < nodes_; ++k)
      out.push_back(c.center + std::polar(c.radius, kTwoPi * static_cast<Real>(k) / static_cast<Real>(nodes_)));
  return out;
}

}  // namespace dynlab
