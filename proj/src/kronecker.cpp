#include "dynlab/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dynlab/error.hpp"

namespace dynlab {

namespace {

constexpr std::int64_t kMaxWindowSteps = 10'000'000'000;
constexpr std::int64_t kMaxCells = 5'000'000;

void check_frequencies(const FrequencyVector& alpha) {
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "frequency vector is empty");
  for (Real a : alpha)
    if (!std::isfinite(a)) throw Error(Errc::InvalidArgument, "frequencies must be finite");
}

void check_eps(Real eps) {
  if (!(eps > 0 && eps < 2)) throw Error(Errc::InvalidEpsilon, "eps must lie in (0, 2)");
}

Real max_abs(const FrequencyVector& alpha) {
  Real m = 0;
  for (Real a : alpha) m = std::max(m, std::abs(a));
  return m;
}

std::string describe(const std::vector<Real>& v) {
  std::ostringstream os;
  os.precision(12);
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << static_cast<double>(v[i]);
  os << ')';
  return os.str();
}

}  // namespace

Real sup_chord(const FrequencyVector& alpha, const PhaseVector& beta, Real t) {
  if (alpha.size() != beta.size()) throw Error(Errc::InvalidArgument, "alpha and beta differ in length");
  Real worst = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) worst = std::max(worst, chord(alpha[j] * t, beta[j]));
  return worst;
}

Real kronecker_step(const FrequencyVector& alpha, Real eps) { return eps / (2 * max_abs(alpha) + 1); }

std::optional<Real> kronecker_time(const FrequencyVector& alpha, const PhaseVector& beta, Real eps, Real t_lo,
                                   Real t_hi) {
  check_frequencies(alpha);
  check_eps(eps);
  if (alpha.size() != beta.size()) throw Error(Errc::InvalidArgument, "alpha and beta differ in length");
  if (!(t_lo < t_hi)) throw Error(Errc::InvalidArgument, "window must satisfy t_lo < t_hi");

  const Real step = kronecker_step(alpha, eps);
  const Real span = (t_hi - t_lo) / step;
  if (span > static_cast<Real>(kMaxWindowSteps)) throw Error(Errc::InvalidArgument, "window too long for the grid");
  const auto last = static_cast<std::int64_t>(std::floor(span + 1e-9L));
  for (std::int64_t i = 0; i <= last; ++i) {
    const Real t = std::min(t_lo + static_cast<Real>(i) * step, t_hi);
    if (sup_chord(alpha, beta, t) < eps) return t;
  }
  if (sup_chord(alpha, beta, t_hi) < eps) return t_hi;
  return std::nullopt;
}

WindowRadius uniform_window_t0(const FrequencyVector& alpha, Real eps, std::optional<Real> beta_step,
                               std::int64_t max_sweep_steps) {
  check_frequencies(alpha);
  check_eps(eps);
  const Real requested = beta_step.value_or(eps);
  if (!(requested > 0) || requested > eps)
    throw Error(Errc::InvalidArgument, "beta grid step must lie in (0, eps]");

  const std::size_t m = alpha.size();
  const auto per_axis = static_cast<std::int64_t>(std::ceil(kTwoPi / requested - 1e-12L));
  const Real h = kTwoPi / static_cast<Real>(per_axis);
  std::int64_t cells = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (cells > kMaxCells / per_axis) throw Error(Errc::SearchSpaceTooLarge, "beta grid exceeds 5e6 cells");
    cells *= per_axis;
  }

  const Real margin = eps / 2;
  const Real reach = 2 * std::asin(margin / 2);  // angular radius of the chord ball
  const Real step = requested / (2 * max_abs(alpha) + 1);

  std::vector<unsigned char> covered(static_cast<std::size_t>(cells), 0);
  std::int64_t remaining = cells;
  Real worst = 0;

  std::vector<std::vector<std::int64_t>> hits(m);
  std::vector<std::size_t> odometer(m);
  auto visit = [&](Real t) {
    for (std::size_t j = 0; j < m; ++j) {
      hits[j].clear();
      const Real theta = reduce_angle(alpha[j] * t);
      const auto lo = static_cast<std::int64_t>(std::ceil((theta - reach) / h));
      const auto hi = static_cast<std::int64_t>(std::floor((theta + reach) / h));
      for (std::int64_t i = lo; i <= hi; ++i) {
        const std::int64_t wrapped = ((i % per_axis) + per_axis) % per_axis;
        if (chord(theta, static_cast<Real>(wrapped) * h) < margin) hits[j].push_back(wrapped);
      }
      if (hits[j].empty()) return;
    }
    std::fill(odometer.begin(), odometer.end(), 0);
    while (true) {
      std::int64_t flat = 0;
      for (std::size_t j = m; j-- > 0;) flat = flat * per_axis + hits[j][odometer[j]];
      if (!covered[static_cast<std::size_t>(flat)]) {
        covered[static_cast<std::size_t>(flat)] = 1;
        --remaining;
        worst = std::max(worst, std::abs(t));
      }
      std::size_t j = 0;
      while (j < m && ++odometer[j] == hits[j].size()) odometer[j++] = 0;
      if (j == m) break;
    }
  };

  for (std::int64_t k = 0; k <= max_sweep_steps && remaining > 0; ++k) {
    const Real t = static_cast<Real>(k) * step;
    visit(-t);
    if (k > 0) visit(t);
  }

  if (remaining > 0) {
    std::int64_t flat = std::find(covered.begin(), covered.end(), 0) - covered.begin();
    std::vector<Real> beta(m);
    for (std::size_t j = 0; j < m; ++j) {
      beta[j] = static_cast<Real>(flat % per_axis) * h;
      flat /= per_axis;
    }
    throw Error(Errc::GridSearchExhausted, "no t found for beta = " + describe(beta));
  }
  return {2 * worst, h, cells};
}

std::optional<Shift> shift_to_independence(const FrequencyVector& alpha, int n_max, const std::vector<Real>& r_candidates,
                                           std::int64_t bound, Real tol) {
  check_frequencies(alpha);
  // A relation found for one shift often survives others; re-checking it is
  // much cheaper than a fresh search and gives the same yes/no answer.
  std::vector<std::vector<std::int64_t>> known;
  for (int n = 1; n <= n_max; ++n) {
    for (Real r : r_candidates) {
      FrequencyVector shifted(alpha.size());
      for (std::size_t j = 0; j < alpha.size(); ++j) shifted[j] = alpha[j] * n + r;
      const bool reused = std::any_of(known.begin(), known.end(), [&](const auto& c) {
        Real sum = 0;
        for (std::size_t j = 0; j < c.size(); ++j) sum += static_cast<Real>(c[j]) * shifted[j];
        return std::abs(sum) < tol;
      });
      if (reused) continue;
      const auto cert = integer_relation_search(shifted, bound, tol);
      if (!cert) return Shift{n, r};
      known.push_back(cert->coefficients);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> pi_rational_detect(Real x, std::int64_t max_denominator, Real tol) {
  if (max_denominator < 1) throw Error(Errc::InvalidArgument, "max_denominator must be >= 1");
  if (!std::isfinite(x)) throw Error(Errc::InvalidArgument, "x must be finite");
  const Real y = x / kPi;
  Real rest = y;
  std::int64_t p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (int depth = 0; depth < 64; ++depth) {
    const Real a_real = std::floor(rest);
    if (std::abs(a_real) > 9e18L) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t p = a * p_prev + p_prev2;
    const std::int64_t q = a * q_prev + q_prev2;
    if (q > max_denominator) break;
    if (std::abs(y * static_cast<Real>(q) - static_cast<Real>(p)) / static_cast<Real>(q) < tol) return std::pair{p, q};
    const Real frac = rest - a_real;
    if (frac < 1e-30L) break;
    rest = 1 / frac;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return std::nullopt;
}

}  // namespace dynlab
