#include "nnls.hpp"

#include <vector>

namespace dynlab::detail {

namespace {

RVector solve_passive(const RMatrix& a, const RVector& b, const std::vector<bool>& passive) {
  std::vector<Eigen::Index> cols;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (passive[static_cast<std::size_t>(j)]) cols.push_back(j);
  RMatrix sub(a.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(cols[k]);
  const RVector z = sub.colPivHouseholderQr().solve(b);
  RVector s = RVector::Zero(a.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) s(cols[k]) = z(static_cast<Eigen::Index>(k));
  return s;
}

}  // namespace

RVector nnls(const RMatrix& a, const RVector& b) {
  const Eigen::Index n = a.cols();
  RVector x = RVector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const Real tol = 1e-15L * (1 + a.norm()) * (1 + b.norm());
  const int max_outer = static_cast<int>(3 * n + 10);

  for (int outer = 0; outer < max_outer; ++outer) {
    const RVector w = a.transpose() * (b - a * x);
    Eigen::Index pick = -1;
    Real best = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<std::size_t>(j)] && w(j) > best) {
        best = w(j);
        pick = j;
      }
    if (pick < 0) break;
    passive[static_cast<std::size_t>(pick)] = true;

    for (int inner = 0; inner <= n; ++inner) {
      const RVector s = solve_passive(a, b, passive);
      bool positive = true;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && s(j) <= 0) positive = false;
      if (positive) {
        x = s;
        break;
      }
      Real step = 1;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && s(j) <= 0) step = std::min(step, x(j) / (x(j) - s(j)));
      x += step * (s - x);
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && x(j) <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0;
        }
    }
  }
  return x;
}

std::optional<RVector> least_distance(const RMatrix& g, const RVector& h) {
  const Eigen::Index m = g.rows(), n = g.cols();
  RMatrix e(n + 1, m);
  e.topRows(n) = g.transpose();
  e.row(n) = h.transpose();
  RVector f = RVector::Zero(n + 1);
  f(n) = 1;
  const RVector u = nnls(e, f);
  const RVector r = e * u - f;
  if (r.norm() < 1e-14L || !(r(n) < 0)) return std::nullopt;
  return RVector(-r.head(n) / r(n));
}

}  // namespace dynlab::detail
