#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace dynlab {

// Every numeric routine runs in x87 extended precision.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;
inline constexpr Complex kI{0, 1};

// Frequencies / pole locations closer than this are the same point.
inline constexpr Real kMergeTol = 1e-9L;
// Region membership slack used when assigning poles.
inline constexpr Real kMembershipTol = 1e-9L;
// Minimum admissible distance between a contour trace and a pole or branch cut.
inline constexpr Real kTraceTol = 1e-6L;
// Clearance the automatic contour keeps from the principal-log cut.
inline constexpr Real kCutClearance = 1e-3L;

inline constexpr int kDefaultNodes = 256;

/// Reduce an angle into [0, 2*pi).
inline Real reduce_angle(Real theta) {
  Real r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// Chordal distance |e^{ia} - e^{ib}|.
inline Real chord(Real a, Real b) { return 2 * std::abs(std::sin((a - b) / 2)); }

}  // namespace dynlab
