#include "dynlab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "dynlab/error.hpp"

namespace dynlab {

namespace {

Real cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

Real distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const Real len2 = std::norm(d);
  if (len2 == 0) return std::abs(z - a);
  Real t = ((z - a) * std::conj(d)).real() / len2;
  t = std::clamp<Real>(t, 0, 1);
  return std::abs(z - (a + t * d));
}

}  // namespace

ConvexCompact ConvexCompact::point(Complex c) { return ConvexCompact(Point{c}); }

ConvexCompact ConvexCompact::disc(Complex center, Real radius) {
  if (!(radius >= 0)) throw Error(Errc::InvalidArgument, "disc radius must be >= 0");
  if (radius == 0) return point(center);
  return ConvexCompact(Disc{center, radius});
}

ConvexCompact ConvexCompact::polygon(std::vector<Complex> vertices) {
  if (vertices.empty()) throw Error(Errc::EmptySet, "polygon without vertices");
  if (vertices.size() == 1) return point(vertices.front());
  if (vertices.size() == 2) {
    if (std::abs(vertices[0] - vertices[1]) <= kMergeTol) return point(vertices[0]);
    return ConvexCompact(Polygon{std::move(vertices)});
  }
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
    if (cross(a, b, c) <= 0)
      throw Error(Errc::InvalidArgument, "polygon vertices are not in strictly convex counterclockwise position");
  }
  return ConvexCompact(Polygon{std::move(vertices)});
}

ConvexCompact ConvexCompact::hull(std::vector<Complex> pts) {
  if (pts.empty()) throw Error(Errc::EmptySet, "hull of an empty set");
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Complex a, Complex b) { return std::abs(a - b) <= kMergeTol; }),
            pts.end());
  if (pts.size() == 1) return point(pts.front());
  std::vector<Complex> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 1) return point(h.front());
  if (h.size() == 2) return ConvexCompact(Polygon{std::move(h)});
  return ConvexCompact(Polygon{std::move(h)});
}

bool ConvexCompact::contains(Complex z, Real tol) const {
  if (const auto* p = std::get_if<Point>(&shape_)) return std::abs(z - p->at) <= tol;
  if (const auto* d = std::get_if<Disc>(&shape_)) return std::abs(z - d->center) <= d->radius + tol;
  const auto& v = std::get<Polygon>(shape_).vertices;
  if (v.size() == 2) return distance_to_segment(z, v[0], v[1]) <= tol;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    // signed distance of z to the left of edge a->b
    if (cross(a, b, z) / std::abs(b - a) < -tol) return false;
  }
  return true;
}

Real ConvexCompact::max_modulus() const {
  if (const auto* p = std::get_if<Point>(&shape_)) return std::abs(p->at);
  if (const auto* d = std::get_if<Disc>(&shape_)) return std::abs(d->center) + d->radius;
  Real m = 0;
  for (const auto& v : std::get<Polygon>(shape_).vertices) m = std::max(m, std::abs(v));
  return m;
}

bool AnnulusSector::contains(Complex z, Real tol) const {
  const Real r = std::abs(z);
  if (r < r_inner - tol || r > r_outer + tol) return false;
  if (theta_hi - theta_lo >= kTwoPi) return true;
  if (r <= tol) return r_inner <= tol;
  const Real offset = reduce_angle(std::arg(z) - theta_lo);
  const Real width = theta_hi - theta_lo;
  const Real slack = tol / r;
  return offset <= width + slack || offset >= kTwoPi - slack;
}

Region Region::whole_plane() {
  return Region(PredicateRegion{[](Complex) { return true; }, "plane"});
}

Region Region::slit_plane() {
  return Region(PredicateRegion{[](Complex z) { return distance_to_negative_axis(z) > 0; }, "slit_plane"});
}

bool Region::contains(Complex z, Real tol) const {
  return std::visit(
      [&](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PredicateRegion>) {
          return k.member(z);
        } else {
          return k.contains(z, tol);
        }
      },
      kind_);
}

Real distance_to_negative_axis(Complex z) {
  if (z.real() <= 0) return std::abs(z.imag());
  return std::abs(z);
}

Real support_function(const ConvexCompact& k, Complex z) {
  const auto& s = k.shape();
  if (const auto* p = std::get_if<ConvexCompact::Point>(&s)) return (z * p->at).real();
  if (const auto* d = std::get_if<ConvexCompact::Disc>(&s)) return (z * d->center).real() + d->radius * std::abs(z);
  const auto& v = std::get<ConvexCompact::Polygon>(s).vertices;
  Real best = (z * v.front()).real();
  for (const auto& u : v) best = std::max(best, (z * u).real());
  return best;
}

}  // namespace dynlab
