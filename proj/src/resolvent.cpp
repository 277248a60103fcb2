#include "dynlab/resolvent.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "dynlab/error.hpp"
#include "nnls.hpp"

namespace dynlab {

namespace {

constexpr Real kSingularTol = 1e-12L;
constexpr Real kUnitTol = 1e-10L;
constexpr int kBallCap = 12;
constexpr std::size_t kSeriesCap = 200000;

void check_vector(const MatrixOperator& t, const CVector& x) {
  if (x.size() != t.dim()) throw Error(Errc::InvalidArgument, "vector length does not match the matrix");
}

}  // namespace

MatrixOperator::MatrixOperator(CMatrix entries) : a_(std::move(entries)) {
  if (a_.rows() < 1 || a_.rows() != a_.cols()) throw Error(Errc::InvalidArgument, "matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < a_.size(); ++i)
    if (!std::isfinite(a_(i).real()) || !std::isfinite(a_(i).imag()))
      throw Error(Errc::InvalidArgument, "matrix entries must be finite");
  Eigen::ComplexEigenSolver<CMatrix> solver(a_, false);
  const auto& ev = solver.eigenvalues();
  eigenvalues_.assign(ev.data(), ev.data() + ev.size());
  for (const auto& l : eigenvalues_) rho_ = std::max(rho_, std::abs(l));
}

MatrixOperator MatrixOperator::weighted_backward_shift(Eigen::Index n, Real weight) {
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) m(k - 1, k) = weight;
  return MatrixOperator(std::move(m));
}

Real MatrixOperator::norm() const {
  Eigen::JacobiSVD<CMatrix> svd(a_);
  return svd.singularValues()(0);
}

Real MatrixOperator::spectrum_distance(Complex z) const {
  Real d = std::numeric_limits<Real>::infinity();
  for (const auto& l : eigenvalues_) d = std::min(d, std::abs(z - l));
  return d;
}

DualFunctional::DualFunctional(CVector coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 1) throw Error(Errc::InvalidArgument, "functional needs at least one coefficient");
}

DualFunctional DualFunctional::dual_of(const CVector& x) {
  const Real n = x.norm();
  if (!(n > 0)) throw Error(Errc::InvalidArgument, "dual of the zero vector");
  return DualFunctional(x.conjugate() / n);
}

Complex DualFunctional::operator()(const CVector& y) const {
  if (y.size() != c_.size()) throw Error(Errc::InvalidArgument, "functional and vector differ in length");
  return (c_.transpose() * y)(0);
}

LaurentTail::LaurentTail(std::vector<Complex> coefficients, Real radius)
    : finite_(std::move(coefficients)), radius_(radius) {
  if (!(radius >= 0)) throw Error(Errc::InvalidArgument, "radius must be nonnegative");
}

LaurentTail::LaurentTail(Generator coefficient, Real radius) : gen_(std::move(coefficient)), radius_(radius) {
  if (!gen_) throw Error(Errc::InvalidArgument, "generator must be callable");
  if (!(radius >= 0)) throw Error(Errc::InvalidArgument, "radius must be nonnegative");
}

LaurentTail LaurentTail::resolvent_of(Complex lambda) {
  return LaurentTail(
      [lambda](std::size_t n) {
        Complex p = 1;
        for (std::size_t k = 0; k < n; ++k) p *= lambda;
        return p;
      },
      std::abs(lambda));
}

Complex LaurentTail::coefficient(std::size_t n) const {
  if (gen_) return gen_(n);
  return n < finite_.size() ? finite_[n] : Complex(0);
}

Complex LaurentTail::operator()(Complex z, Real tol, std::size_t max_terms) const {
  if (!(std::abs(z) > radius_)) throw Error(Errc::InsideSpectralRadius, "|z| must exceed the validity radius");
  Complex sum = 0;
  const Complex w = Real(1) / z;
  Complex power = w;
  const std::size_t count = gen_ ? max_terms : finite_.size();
  for (std::size_t n = 0; n < count; ++n, power *= w) {
    const Complex term = coefficient(n) * power;
    sum += term;
    if (gen_ && std::abs(term) < tol && n > 8) break;
  }
  return sum;
}

LaurentTail shift_B(const LaurentTail& f) {
  if (f.is_finite()) {
    std::vector<Complex> next;
    for (std::size_t n = 1; n < f.finite_size(); ++n) next.push_back(f.coefficient(n));
    return LaurentTail(std::move(next), f.radius());
  }
  return LaurentTail([f](std::size_t n) { return f.coefficient(n + 1); }, f.radius());
}

LaurentTail psi_tail(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x) {
  check_vector(t, x);
  return LaurentTail(
      [a = t.matrix(), lambda, x](std::size_t n) {
        CVector v = x;
        for (std::size_t k = 0; k < n; ++k) v = a * v;
        return lambda(v);
      },
      t.spectral_radius());
}

Complex resolvent_series(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x, Complex z, Real tol,
                         Real margin) {
  check_vector(t, x);
  if (!(margin >= 0.1L)) throw Error(Errc::InvalidArgument, "margin must be at least 0.1");
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tol must be positive");
  const Real rz = std::abs(z);
  if (!(rz > t.spectral_radius() * (1 + margin)) || rz == 0)
    throw Error(Errc::InsideSpectralRadius, "|z| must exceed rho(T)(1 + margin)");

  const Real lnorm = lambda.norm();
  CVector v = x;
  Complex sum = 0;
  Complex power = Real(1) / z;
  Real previous = std::numeric_limits<Real>::infinity();
  for (std::size_t n = 0; n < kSeriesCap; ++n) {
    sum += lambda(v) * power;
    const Real bound = v.norm() * lnorm * std::pow(rz, -static_cast<Real>(n + 1));
    if (bound == 0) return sum;
    const Real ratio = bound / previous;
    if (bound < tol && ratio < 1 && bound * ratio / (1 - ratio) < tol) return sum;
    previous = bound;
    v = t.matrix() * v;
    power /= z;
  }
  throw Error(Errc::InsideSpectralRadius, "series failed to converge within the iteration cap");
}

Complex resolvent_direct(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x, Complex z) {
  check_vector(t, x);
  if (t.spectrum_distance(z) < kSingularTol) throw Error(Errc::SingularSystem, "z is within 1e-12 of an eigenvalue");
  CMatrix shifted = -t.matrix();
  shifted.diagonal().array() += z;
  const CVector y = shifted.fullPivLu().solve(x);
  return lambda(y);
}

Real quasi_conjugacy_residual(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x,
                              const std::vector<Complex>& samples) {
  check_vector(t, x);
  const CVector tx = t.matrix() * x;
  const Complex a0 = lambda(x);
  Real worst = 0;
  for (const auto& z : samples) {
    if (!(std::abs(z) > 1.1L * t.spectral_radius()))
      throw Error(Errc::InsideSpectralRadius, "sample point inside |z| = 1.1 rho(T)");
    const Complex lhs = resolvent_direct(t, lambda, tx, z);
    const Complex rhs = z * resolvent_direct(t, lambda, x, z) - a0;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ApproxEigenvector approximate_eigenvector(const MatrixOperator& t, Complex lambda) {
  CMatrix shifted = t.matrix();
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
  const Eigen::Index last = t.dim() - 1;
  CVector x = svd.matrixV().col(last);
  Eigen::Index big = 0;
  x.cwiseAbs().maxCoeff(&big);
  x *= std::conj(x(big)) / std::abs(x(big));
  x(big) = Complex(x(big).real(), 0);
  x.normalize();
  return {x, svd.singularValues()(last)};
}

DualFunctional ball_functional_finite(const std::vector<CVector>& xs, const std::vector<Real>& as) {
  if (xs.size() != as.size()) throw Error(Errc::InvalidArgument, "xs and as differ in length");
  if (xs.empty()) throw Error(Errc::InvalidArgument, "at least one vector is required");
  if (xs.size() > static_cast<std::size_t>(kBallCap))
    throw Error(Errc::EnumerationCapExceeded, "more than 12 vectors");
  const Eigen::Index n = xs[0].size();
  Real total = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].size() != n) throw Error(Errc::InvalidArgument, "vectors differ in length");
    if (std::abs(xs[k].norm() - 1) > kUnitTol) throw Error(Errc::InvalidArgument, "vectors must be unit length");
    if (!(as[k] >= 0)) throw Error(Errc::InvalidArgument, "a_k must be nonnegative");
    total += as[k];
  }
  if (total > 1 + 1e-12L) throw Error(Errc::InvalidArgument, "sum of a_k exceeds 1");

  // Re(c . x) = <(Re c, Im c), (Re x, -Im x)> in R^{2n}.
  const auto k = static_cast<Eigen::Index>(xs.size());
  detail::RMatrix base(k, 2 * n);
  for (Eigen::Index i = 0; i < k; ++i) {
    base.row(i).head(n) = xs[static_cast<std::size_t>(i)].real().transpose();
    base.row(i).tail(n) = -xs[static_cast<std::size_t>(i)].imag().transpose();
  }
  detail::RVector h(k);
  for (Eigen::Index i = 0; i < k; ++i) h(i) = as[static_cast<std::size_t>(i)];

  std::optional<detail::RVector> best;
  const std::uint32_t patterns = 1u << (k - 1);
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    detail::RMatrix g = base;
    for (Eigen::Index i = 1; i < k; ++i)
      if (mask & (1u << (i - 1))) g.row(i) *= -1;
    const auto w = detail::least_distance(g, h);
    if (w && (!best || w->norm() < best->norm())) best = w;
  }
  if (!best || best->norm() > 1 + 1e-8L)
    throw Error(Errc::Infeasible, "no functional of norm <= 1 found; the existence guarantee failed");

  CVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c(i) = Complex((*best)(i), (*best)(n + i));
  DualFunctional out(std::move(c));
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(out(xs[i])) < as[i] - 1e-8L)
      throw Error(Errc::Infeasible, "post-check |Lambda(x_k)| >= a_k failed");
  return out;
}

RungeReport runge_range_check(const MatrixOperator& t, const DualFunctional& lambda, Complex lambda0, int n,
                              const std::vector<Complex>& samples, std::optional<Complex> lambda_n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (samples.empty()) throw Error(Errc::InvalidArgument, "sample set is empty");
  const Complex ln = lambda_n.value_or(lambda0);
  const auto [x, residual] = approximate_eigenvector(t, ln);
  const Real n3 = static_cast<Real>(n) * n * n;
  if (residual > 1 / n3)
    throw Error(Errc::PreconditionViolated, "no approximate eigenvector with residual <= 1/n^3");
  const Complex a0 = lambda(x);
  if (std::abs(a0) < 1e-12L) throw Error(Errc::FunctionalVanishes, "|Lambda(x)| < 1e-12");

  RungeReport report{0, 0, residual, a0, ln};
  for (const auto& z : samples) {
    const Complex psi = resolvent_direct(t, lambda, x, z);
    report.sup_error = std::max(report.sup_error, std::abs(psi / a0 - Real(1) / (z - lambda0)));
    report.approximation_error = std::max(report.approximation_error, std::abs(psi - a0 / (z - ln)));
  }
  return report;
}

}  // namespace dynlab
