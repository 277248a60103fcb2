#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

using FrequencyVector = std::vector<Real>;
using PhaseVector = std::vector<Real>;

/// sup_j |e^{i alpha_j t} - e^{i beta_j}|.
Real sup_chord(const FrequencyVector& alpha, const PhaseVector& beta, Real t);

/// Grid step used by kronecker_time: eps / (2 max|alpha_j| + 1).
Real kronecker_step(const FrequencyVector& alpha, Real eps);

/// Smallest grid point t in [t_lo, t_hi] with sup_chord < eps. The grid is
/// t_lo + i * kronecker_step(alpha, eps); nullopt when no grid point works.
std::optional<Real> kronecker_time(const FrequencyVector& alpha, const PhaseVector& beta, Real eps, Real t_lo,
                                   Real t_hi);

struct WindowRadius {
  Real t0;         // every window [x, x + t0] holds a t within eps of any beta
  Real beta_step;  // realized spacing of the beta grid (<= requested step)
  std::int64_t cells;
};

/// Covers the torus by a grid of cell centers with spacing <= beta_step and
/// finds, for each center b, a sample t_b of smallest |t| with
/// sup_chord(alpha, b, t_b) < eps / 2. Samples are k * beta_step / (2 max|alpha| + 1),
/// so for beta_step == eps they sit on the kronecker_time grid. Returns
/// t0 = 2 max |t_b|; then x + t0/2 + t_b lies in [x, x + t0] for every x.
/// Requires beta_step <= eps; at most max_sweep_steps samples per sign of t.
WindowRadius uniform_window_t0(const FrequencyVector& alpha, Real eps, std::optional<Real> beta_step = std::nullopt,
                               std::int64_t max_sweep_steps = 50'000'000);

enum class RelationKind { Unrestricted, ZeroSum };
enum class RelationMode { Auto, Exhaustive, Lattice };

struct RelationCertificate {
  std::vector<std::int64_t> coefficients;
  Real residual;
  RelationKind kind;
};

/// Canonical nonzero c with max|c_j| <= bound and |sum c_j alpha_j| < tol:
/// smallest max|c_j| first, then lexicographic among vectors whose first
/// nonzero entry is positive. Exhaustive mode needs (2 bound + 1)^m <= 1e8;
/// Auto picks exhaustive for m <= 3 within that cap, otherwise LLL reduction
/// followed by Fincke-Pohst enumeration.
std::optional<RelationCertificate> integer_relation_search(const FrequencyVector& alpha, std::int64_t bound, Real tol,
                                                           RelationMode mode = RelationMode::Auto);

/// Same search restricted to sum c_j = 0.
std::optional<RelationCertificate> zero_sum_relation_search(const FrequencyVector& alpha, std::int64_t bound, Real tol,
                                                            RelationMode mode = RelationMode::Auto);

struct Shift {
  int n;
  Real r;
};

/// First (n, r), n = 1..n_max in order and r in candidate order, for which
/// (alpha_j n + r) has no integer relation up to (bound, tol).
std::optional<Shift> shift_to_independence(const FrequencyVector& alpha, int n_max, const std::vector<Real>& r_candidates,
                                           std::int64_t bound, Real tol);

/// First continued-fraction convergent p/q of x/pi with q <= max_denominator
/// and |x/pi - p/q| < tol.
std::optional<std::pair<std::int64_t, std::int64_t>> pi_rational_detect(Real x, std::int64_t max_denominator, Real tol);

}  // namespace dynlab
