#include "dynlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynlab/error.hpp"
#include "dynlab/exptype.hpp"

namespace dynlab {

namespace {

constexpr Real kImagTol = 1e-9L;
constexpr Real kBisectWidth = 1e-10L;

int sign_of(Real x) { return (x > 0) - (x < 0); }

Real quadrant_target(int re, int im) {
  if (re == 0 || im == 0) throw Error(Errc::ZeroSign, "quadrant needs nonzero signs");
  if (re > 0) return im > 0 ? 3 * kPi / 4 : 5 * kPi / 4;
  return im > 0 ? kPi / 4 : 7 * kPi / 4;
}

Real real_value(const ExpPolynomial& g, Real x) {
  const Complex v = g(x);
  if (std::abs(v.imag()) > kImagTol) throw Error(Errc::NotRealValued, "|Im g| exceeds 1e-9 on the real line");
  return v.real();
}

}  // namespace

IndexSequence::IndexSequence(std::vector<std::int64_t> prefix, Successor next)
    : prefix_(std::move(prefix)), next_(std::move(next)) {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] <= 0) throw Error(Errc::InvalidArgument, "index sequence entries must be positive");
    if (i > 0 && prefix_[i] <= prefix_[i - 1])
      throw Error(Errc::InvalidArgument, "index sequence must be strictly increasing");
  }
  if (next_ && prefix_.empty()) throw Error(Errc::InvalidArgument, "a successor rule needs a nonempty prefix");
}

IndexSequence IndexSequence::naturals() {
  return IndexSequence({1}, [](std::int64_t n) { return n + 1; });
}

std::vector<std::int64_t> IndexSequence::up_to(std::int64_t horizon) const {
  std::vector<std::int64_t> out;
  for (auto v : prefix_) {
    if (v > horizon) return out;
    out.push_back(v);
  }
  if (!next_) return out;
  std::int64_t last = prefix_.back();
  while (true) {
    const std::int64_t v = next_(last);
    if (v <= last) throw Error(Errc::InvalidArgument, "successor rule must increase");
    if (v > horizon) break;
    out.push_back(v);
    last = v;
  }
  return out;
}

Real lower_density_estimate(const IndexSequence& seq, const std::vector<Real>& r_values) {
  if (r_values.empty()) throw Error(Errc::InvalidArgument, "r_values must be nonempty");
  for (std::size_t i = 0; i < r_values.size(); ++i)
    if (!(r_values[i] > 0) || (i > 0 && !(r_values[i] > r_values[i - 1])))
      throw Error(Errc::InvalidArgument, "r_values must be positive and increasing");
  const auto elems = seq.up_to(static_cast<std::int64_t>(std::floor(r_values.back())));
  const std::size_t keep = std::max<std::size_t>(1, (r_values.size() + 3) / 4);
  Real best = std::numeric_limits<Real>::infinity();
  for (std::size_t i = r_values.size() - keep; i < r_values.size(); ++i) {
    const Real r = r_values[i];
    const auto count = std::upper_bound(elems.begin(), elems.end(), r,
                                        [](Real x, std::int64_t v) { return x < static_cast<Real>(v); }) -
                       elems.begin();
    best = std::min(best, static_cast<Real>(count) / r);
  }
  return best;
}

IndexSequence thin_sequence(const IndexSequence& seq, Real t0, std::int64_t horizon) {
  if (!(t0 > 0)) throw Error(Errc::InvalidArgument, "t0 must be positive");
  std::vector<std::int64_t> out;
  for (auto n : seq.up_to(horizon))
    if (out.empty() || static_cast<Real>(out.back()) + t0 < static_cast<Real>(n)) out.push_back(n);
  return IndexSequence(std::move(out));
}

std::pair<ExpPolynomial, ExpPolynomial> real_imag_parts(const ExpPolynomial& h) {
  const ExpPolynomial hs = h.conjugate();
  return {(h + hs) * Complex(0.5L), (h - hs) * Complex(0, -0.5L)};
}

PhaseVector quadrant_phase_targets(const std::vector<SignPair>& signs) {
  PhaseVector out;
  out.reserve(signs.size());
  for (const auto& s : signs) out.push_back(quadrant_target(s.re, s.im));
  return out;
}

bool left_halfplane_check(Complex h, Real theta, Real beta) {
  if (h == Complex(0)) throw Error(Errc::PreconditionViolated, "h must be nonzero");
  if (!(chord(theta, beta) < 0.5L)) throw Error(Errc::PreconditionViolated, "|e^{i theta} - e^{i beta}| must be < 1/2");
  const int re = sign_of(h.real()), im = sign_of(h.imag());
  if (re == 0 || im == 0) throw Error(Errc::PreconditionViolated, "h must lie in an open quadrant");
  if (chord(beta, quadrant_target(re, im)) > 1e-12L)
    throw Error(Errc::PreconditionViolated, "beta is not the quadrant target of h");
  return (std::polar(Real(1), theta) * h).real() < 0;
}

std::vector<bool> window_orbit_test(const ExpPolynomial& f, Real t0, const IndexSequence& seq, std::int64_t horizon,
                                    Real delta) {
  if (!(t0 > 0)) throw Error(Errc::InvalidArgument, "t0 must be positive");
  if (!(delta > 0 && delta < 1)) throw Error(Errc::InvalidArgument, "delta must lie in (0, 1)");
  constexpr int kSamples = 1000;
  std::vector<bool> out;
  for (auto n : seq.up_to(horizon)) {
    Real worst = 0;
    for (int k = 0; k <= kSamples && worst < delta; ++k)
      worst = std::max(worst, std::abs(f(static_cast<Real>(n) + t0 * k / kSamples) - Complex(1)));
    out.push_back(worst < delta);
  }
  return out;
}

std::optional<Real> zero_window_scan(const ExpPolynomial& g, Real a, Real b, std::optional<Real> step) {
  if (!(a < b)) throw Error(Errc::InvalidArgument, "window must satisfy a < b");
  const Real h = step.value_or((b - a) * 1e-3L);
  if (!(h > 0)) throw Error(Errc::InvalidArgument, "step must be positive");
  const auto count = static_cast<std::int64_t>(std::ceil((b - a) / h - 1e-9L));

  Real x_prev = a;
  Real g_prev = real_value(g, a);
  if (g_prev == 0) return a;
  for (std::int64_t k = 1; k <= count; ++k) {
    const Real x = k == count ? b : a + static_cast<Real>(k) * h;
    const Real gx = real_value(g, x);
    if (gx == 0) return x;
    if (sign_of(gx) != sign_of(g_prev)) {
      Real lo = x_prev, hi = x;
      const int s_lo = sign_of(g_prev);
      while (hi - lo > kBisectWidth) {
        const Real mid = (lo + hi) / 2;
        const Real gm = g(mid).real();
        if (gm == 0) return mid;
        (sign_of(gm) == s_lo ? lo : hi) = mid;
      }
      return (lo + hi) / 2;
    }
    x_prev = x;
    g_prev = gx;
  }
  return std::nullopt;
}

std::optional<WindowCertificate> window_zero_certificate(const std::vector<ExpPolynomial>& h, std::int64_t n, Real t0) {
  if (!(t0 > 0)) throw Error(Errc::InvalidArgument, "t0 must be positive");
  const Real lo = static_cast<Real>(n), hi = lo + t0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    const auto [re, im] = real_imag_parts(h[j]);
    if (const auto z = zero_window_scan(re, lo, hi)) return WindowCertificate{n, lo, hi, j, Part::Real, *z};
    if (const auto z = zero_window_scan(im, lo, hi)) return WindowCertificate{n, lo, hi, j, Part::Imaginary, *z};
  }
  return std::nullopt;
}

TypeZeroReport type_vs_zero_density_report(const ExpPolynomial& p, const std::vector<std::pair<Real, Real>>& windows,
                                           const std::vector<Real>& radii) {
  if (windows.empty()) throw Error(Errc::InvalidArgument, "windows must be nonempty");
  TypeZeroReport report{};
  report.degenerate = p.is_zero();
  report.type_estimate =
      report.degenerate ? -std::numeric_limits<Real>::infinity() : growth_estimate(p, TypeMode{}, radii);
  for (const auto& [a, b] : windows) {
    report.t0 = std::max(report.t0, b - a);
    if (zero_window_scan(p, a, b)) ++report.windows_with_zero;
  }
  report.window_hit_density = static_cast<Real>(report.windows_with_zero) / static_cast<Real>(windows.size());
  report.flag = report.window_hit_density / report.t0 > report.type_estimate;
  return report;
}

}  // namespace dynlab
