#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dynlab/exp_polynomial.hpp"
#include "dynlab/kronecker.hpp"

namespace dynlab {

/// Strictly increasing sequence of positive integers: an explicit prefix,
/// optionally continued by a successor rule.
class IndexSequence {
 public:
  using Successor = std::function<std::int64_t(std::int64_t)>;

  explicit IndexSequence(std::vector<std::int64_t> prefix, Successor next = {});

  /// 1, 2, 3, ...
  static IndexSequence naturals();

  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  bool is_finite() const noexcept { return !next_; }

  /// Every element <= horizon, extending the prefix through the successor.
  std::vector<std::int64_t> up_to(std::int64_t horizon) const;

 private:
  std::vector<std::int64_t> prefix_;
  Successor next_;
};

/// min over the top quartile of r_values of #{lambda <= r} / r.
Real lower_density_estimate(const IndexSequence& seq, const std::vector<Real>& r_values);

/// n_1 = min N, n_j = min{n in N : n_{j-1} + t0 < n}, scanned up to horizon.
IndexSequence thin_sequence(const IndexSequence& seq, Real t0, std::int64_t horizon);

/// R = (h + h*)/2 and I = (h - h*)/(2i); real on the real line.
std::pair<ExpPolynomial, ExpPolynomial> real_imag_parts(const ExpPolynomial& h);

struct SignPair {
  int re;
  int im;
};

/// Quadrant targets: (+,+) 3pi/4, (+,-) 5pi/4, (-,+) pi/4, (-,-) 7pi/4.
PhaseVector quadrant_phase_targets(const std::vector<SignPair>& signs);

/// Re(e^{i theta} h) < 0, after checking |e^{i theta} - e^{i beta}| < 1/2,
/// h != 0 and that beta is the quadrant target of h.
bool left_halfplane_check(Complex h, Real theta, Real beta);

/// Per n in N (up to horizon): sampled sup over [n, n + t0] of |f(x) - 1| < delta.
std::vector<bool> window_orbit_test(const ExpPolynomial& f, Real t0, const IndexSequence& seq, std::int64_t horizon,
                                    Real delta = 0.5L);

/// First zero of a real-valued g on [a, b]: exact sample zero or a sign
/// change bisected to 1e-10. Even-order zeros are invisible. Default step is
/// 1e-3 (b - a).
std::optional<Real> zero_window_scan(const ExpPolynomial& g, Real a, Real b, std::optional<Real> step = std::nullopt);

enum class Part { Real, Imaginary };

struct WindowCertificate {
  std::int64_t n;
  Real lo;
  Real hi;
  std::size_t index;
  Part part;
  Real location;
};

/// First j and part (real before imaginary) of h_j with a detected zero on [n, n + t0].
std::optional<WindowCertificate> window_zero_certificate(const std::vector<ExpPolynomial>& h, std::int64_t n, Real t0);

struct TypeZeroReport {
  Real type_estimate;  // -inf when P == 0
  std::size_t windows_with_zero;
  Real window_hit_density;  // fraction of windows with a zero
  Real t0;                  // longest window
  bool degenerate;          // P == 0
  bool flag;                // window_hit_density / t0 > type_estimate
};

TypeZeroReport type_vs_zero_density_report(const ExpPolynomial& p, const std::vector<std::pair<Real, Real>>& windows,
                                           const std::vector<Real>& radii);

}  // namespace dynlab
