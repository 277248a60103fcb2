#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dynlab/error.hpp"
#include "dynlab/kronecker.hpp"

namespace dynlab {

namespace {

constexpr Real kExhaustiveCap = 1e8L;
constexpr std::int64_t kEnumerationNodeCap = 20'000'000;

using IntVec = std::vector<std::int64_t>;

/// Neumaier-compensated sum_j c_j alpha_j.
Real compensated_dot(const IntVec& c, const FrequencyVector& alpha) {
  Real sum = 0, carry = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Real term = static_cast<Real>(c[j]) * alpha[j];
    const Real t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

std::int64_t sup_norm(const IntVec& c) {
  std::int64_t m = 0;
  for (auto v : c) m = std::max(m, std::abs(v));
  return m;
}

/// Flip so the first nonzero entry is positive.
void normalize_sign(IntVec& c) {
  for (auto v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    return;
  }
}

bool canonical_less(const IntVec& a, const IntVec& b) {
  const auto na = sup_norm(a), nb = sup_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

void validate(const FrequencyVector& alpha, std::int64_t bound, Real tol) {
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "frequency vector is empty");
  for (Real a : alpha)
    if (!std::isfinite(a)) throw Error(Errc::InvalidArgument, "frequencies must be finite");
  if (bound < 1) throw Error(Errc::InvalidArgument, "bound must be positive");
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tol must be positive");
}

Real cube_size(std::size_t m, std::int64_t bound) {
  return std::pow(static_cast<Real>(2 * bound + 1), static_cast<Real>(m));
}

// Shell-by-shell lexicographic scan over sign-normalized vectors.
class ExhaustiveScan {
 public:
  ExhaustiveScan(const FrequencyVector& alpha, Real tol, bool zero_sum)
      : alpha_(alpha), tol_(tol), zero_sum_(zero_sum), c_(alpha.size()) {
    for (Real a : alpha) scale_ += std::abs(a);
  }

  std::optional<IntVec> run(std::int64_t bound) {
    for (shell_ = 1; shell_ <= bound; ++shell_)
      if (visit(0, true, false, 0, 0)) return c_;
    return std::nullopt;
  }

 private:
  bool visit(std::size_t j, bool leading, bool reached, std::int64_t sum_c, Real partial) {
    const std::size_t m = c_.size();
    if (j == m) {
      if (leading || !reached) return false;
      if (zero_sum_ && sum_c != 0) return false;
      if (std::abs(partial) >= 2 * tol_ + 1e-17L * scale_ * static_cast<Real>(shell_)) return false;
      return std::abs(compensated_dot(c_, alpha_)) < tol_;
    }
    std::int64_t lo = leading ? 0 : -shell_;
    std::int64_t hi = shell_;
    if (zero_sum_ && j + 1 == m) {
      lo = hi = -sum_c;
      if (std::abs(lo) > shell_ || (leading && lo <= 0)) return false;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      c_[j] = v;
      if (visit(j + 1, leading && v == 0, reached || std::abs(v) == shell_, sum_c + v,
                partial + static_cast<Real>(v) * alpha_[j]))
        return true;
    }
    c_[j] = 0;
    return false;
  }

  const FrequencyVector& alpha_;
  Real tol_;
  bool zero_sum_;
  IntVec c_;
  std::int64_t shell_ = 0;
  Real scale_ = 0;
};

struct LatticeRow {
  IntVec u;  // integer coordinates c
  Real tail;  // N * sum c_j alpha_j
};

struct GramSchmidt {
  std::vector<std::vector<Real>> mu;
  std::vector<Real> norm2;
};

GramSchmidt gram_schmidt(const std::vector<LatticeRow>& rows) {
  const std::size_t d = rows.size();
  GramSchmidt gs{std::vector<std::vector<Real>>(d, std::vector<Real>(d, 0)), std::vector<Real>(d, 0)};
  std::vector<std::vector<Real>> star(d);
  const std::size_t n = rows[0].u.size() + 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Real> v(n);
    for (std::size_t j = 0; j + 1 < n; ++j) v[j] = static_cast<Real>(rows[i].u[j]);
    v[n - 1] = rows[i].tail;
    for (std::size_t k = 0; k < i; ++k) {
      Real p = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) p += static_cast<Real>(rows[i].u[j]) * star[k][j];
      p += rows[i].tail * star[k][n - 1];
      gs.mu[i][k] = p / gs.norm2[k];
      for (std::size_t j = 0; j < n; ++j) v[j] -= gs.mu[i][k] * star[k][j];
    }
    Real s = 0;
    for (Real x : v) s += x * x;
    gs.norm2[i] = s;
    star[i] = std::move(v);
  }
  return gs;
}

void subtract_multiple(LatticeRow& a, const LatticeRow& b, std::int64_t q) {
  for (std::size_t j = 0; j < a.u.size(); ++j) a.u[j] -= q * b.u[j];
  a.tail -= static_cast<Real>(q) * b.tail;
}

void lll_reduce(std::vector<LatticeRow>& rows, Real delta = 0.99L) {
  const std::size_t d = rows.size();
  if (d < 2) return;
  GramSchmidt gs = gram_schmidt(rows);
  std::size_t k = 1;
  int guard = 0;
  while (k < d) {
    if (++guard > 100000) throw Error(Errc::SearchSpaceTooLarge, "basis reduction failed to converge");
    for (std::size_t j = k; j-- > 0;) {
      const Real q_real = std::nearbyint(gs.mu[k][j]);
      if (q_real == 0) continue;
      if (std::abs(q_real) > 1e15L) throw Error(Errc::SearchSpaceTooLarge, "basis entries overflow");
      const auto q = static_cast<std::int64_t>(q_real);
      subtract_multiple(rows[k], rows[j], q);
      for (std::size_t i = 0; i < j; ++i) gs.mu[k][i] -= q_real * gs.mu[j][i];
      gs.mu[k][j] -= q_real;
    }
    const Real lhs = gs.norm2[k];
    const Real rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(rows[k], rows[k - 1]);
      gs = gram_schmidt(rows);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Fincke-Pohst enumeration of every lattice vector with squared norm <= radius2.
class Enumerator {
 public:
  Enumerator(const std::vector<LatticeRow>& rows, const FrequencyVector& alpha, std::int64_t bound, Real tol)
      : rows_(rows), gs_(gram_schmidt(rows)), alpha_(alpha), bound_(bound), tol_(tol), x_(rows.size(), 0) {}

  std::optional<IntVec> run(Real radius2) {
    descend(rows_.size(), radius2);
    return best_;
  }

 private:
  void descend(std::size_t level, Real budget) {
    if (level == 0) {
      consider();
      return;
    }
    const std::size_t i = level - 1;
    Real center = 0;
    for (std::size_t j = i + 1; j < rows_.size(); ++j) center -= gs_.mu[j][i] * static_cast<Real>(x_[j]);
    const Real b = gs_.norm2[i];
    if (!(b > 0)) throw Error(Errc::SearchSpaceTooLarge, "degenerate lattice basis");
    const Real half = std::sqrt(std::max<Real>(budget, 0) / b);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half));
    const auto hi = static_cast<std::int64_t>(std::floor(center + half));
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (++nodes_ > kEnumerationNodeCap) throw Error(Errc::SearchSpaceTooLarge, "lattice enumeration node cap hit");
      x_[i] = v;
      const Real dev = static_cast<Real>(v) - center;
      descend(i, budget - b * dev * dev);
    }
    x_[i] = 0;
  }

  void consider() {
    const std::size_t m = alpha_.size();
    IntVec c(m, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (x_[i] != 0)
        for (std::size_t j = 0; j < m; ++j) c[j] += x_[i] * rows_[i].u[j];
    const auto norm = sup_norm(c);
    if (norm == 0 || norm > bound_) return;
    if (!(std::abs(compensated_dot(c, alpha_)) < tol_)) return;
    normalize_sign(c);
    if (!best_ || canonical_less(c, *best_)) best_ = c;
  }

  const std::vector<LatticeRow>& rows_;
  GramSchmidt gs_;
  const FrequencyVector& alpha_;
  std::int64_t bound_;
  Real tol_;
  IntVec x_;
  std::optional<IntVec> best_;
  std::int64_t nodes_ = 0;
};

std::optional<IntVec> lattice_search(const FrequencyVector& alpha, std::int64_t bound, Real tol, bool zero_sum) {
  const std::size_t m = alpha.size();
  const Real scale = 1 / tol;
  std::vector<LatticeRow> rows;
  const std::size_t d = zero_sum ? m - 1 : m;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec u(m, 0);
    u[i] = 1;
    if (zero_sum) u[m - 1] = -1;
    rows.push_back({u, scale * compensated_dot(u, alpha)});
  }
  lll_reduce(rows);
  const Real radius2 = (static_cast<Real>(m) * static_cast<Real>(bound) * static_cast<Real>(bound) + 1) * (1 + 1e-12L);
  return Enumerator(rows, alpha, bound, tol).run(radius2);
}

std::optional<RelationCertificate> relation_search(const FrequencyVector& alpha, std::int64_t bound, Real tol,
                                                   RelationMode mode, bool zero_sum) {
  validate(alpha, bound, tol);
  const std::size_t m = alpha.size();
  if (zero_sum && m == 1) return std::nullopt;
  const bool fits = cube_size(m, bound) <= kExhaustiveCap;
  if (mode == RelationMode::Exhaustive && !fits)
    throw Error(Errc::SearchSpaceTooLarge, "(2 bound + 1)^m exceeds 1e8");
  if (mode == RelationMode::Auto) mode = (m <= 3 && fits) ? RelationMode::Exhaustive : RelationMode::Lattice;

  const auto found = mode == RelationMode::Exhaustive ? ExhaustiveScan(alpha, tol, zero_sum).run(bound)
                                                       : lattice_search(alpha, bound, tol, zero_sum);
  if (!found) return std::nullopt;
  return RelationCertificate{*found, std::abs(compensated_dot(*found, alpha)),
                             zero_sum ? RelationKind::ZeroSum : RelationKind::Unrestricted};
}

}  // namespace

std::optional<RelationCertificate> integer_relation_search(const FrequencyVector& alpha, std::int64_t bound, Real tol,
                                                           RelationMode mode) {
  return relation_search(alpha, bound, tol, mode, false);
}

std::optional<RelationCertificate> zero_sum_relation_search(const FrequencyVector& alpha, std::int64_t bound, Real tol,
                                                            RelationMode mode) {
  return relation_search(alpha, bound, tol, mode, true);
}

}  // namespace dynlab
