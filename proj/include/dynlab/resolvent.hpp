#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "dynlab/types.hpp"

namespace dynlab {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Square complex matrix with its spectrum computed once.
class MatrixOperator {
 public:
  explicit MatrixOperator(CMatrix entries);

  /// Truncated backward shift e_k -> weight * e_{k-1}.
  static MatrixOperator weighted_backward_shift(Eigen::Index n, Real weight);

  const CMatrix& matrix() const noexcept { return a_; }
  Eigen::Index dim() const noexcept { return a_.rows(); }
  const std::vector<Complex>& eigenvalues() const noexcept { return eigenvalues_; }
  Real spectral_radius() const noexcept { return rho_; }
  /// Largest singular value.
  Real norm() const;
  /// Distance from z to the computed spectrum.
  Real spectrum_distance(Complex z) const;

 private:
  CMatrix a_;
  std::vector<Complex> eigenvalues_;
  Real rho_ = 0;
};

/// Lambda(y) = sum_i c_i y_i, with the euclidean dual norm.
class DualFunctional {
 public:
  explicit DualFunctional(CVector coefficients);
  /// Norm-one functional attaining ||x|| at x: c = conj(x) / ||x||.
  static DualFunctional dual_of(const CVector& x);

  const CVector& coefficients() const noexcept { return c_; }
  Complex operator()(const CVector& y) const;
  Real norm() const { return c_.norm(); }

 private:
  CVector c_;
};

/// F(z) = sum_n a_n z^{-(n+1)}, valid for |z| > radius.
class LaurentTail {
 public:
  using Generator = std::function<Complex(std::size_t)>;

  LaurentTail(std::vector<Complex> coefficients, Real radius);
  LaurentTail(Generator coefficient, Real radius);

  /// 1/(z - lambda): a_n = lambda^n.
  static LaurentTail resolvent_of(Complex lambda);

  Complex coefficient(std::size_t n) const;
  Real radius() const noexcept { return radius_; }
  bool is_finite() const noexcept { return !gen_; }
  std::size_t finite_size() const noexcept { return finite_.size(); }

  /// Partial sums until |a_n| |z|^{-(n+1)} < tol, at most max_terms terms.
  Complex operator()(Complex z, Real tol = 1e-18L, std::size_t max_terms = 100000) const;

 private:
  std::vector<Complex> finite_;
  Generator gen_;
  Real radius_;
};

/// B F(z) = z F(z) - a_0: a_n -> a_{n+1}.
LaurentTail shift_B(const LaurentTail& f);

/// Psi(x) in coefficient form: a_n = Lambda(T^n x), radius rho(T).
LaurentTail psi_tail(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x);

/// Sum_n Lambda(T^n x) z^{-(n+1)}; requires |z| > rho(T)(1 + margin), margin >= 0.1.
Complex resolvent_series(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x, Complex z,
                         Real tol = 1e-15L, Real margin = 0.1L);

/// Lambda((zI - T)^{-1} x) by LU solve.
Complex resolvent_direct(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x, Complex z);

/// max_z |Psi(Tx)(z) - (z Psi(x)(z) - Lambda(x))|; samples must satisfy |z| > 1.1 rho(T).
Real quasi_conjugacy_residual(const MatrixOperator& t, const DualFunctional& lambda, const CVector& x,
                              const std::vector<Complex>& samples);

struct ApproxEigenvector {
  CVector x;  // unit vector, largest entry real and positive
  Real residual;
};

/// Right singular vector of T - lambda I for its smallest singular value.
ApproxEigenvector approximate_eigenvector(const MatrixOperator& t, Complex lambda);

/// Norm <= 1 functional with |Lambda(x_k)| >= a_k, by minimum-norm search over
/// sign patterns of Re Lambda(x_k). Needs unit x_k, a_k >= 0, sum a_k <= 1, k <= 12.
DualFunctional ball_functional_finite(const std::vector<CVector>& xs, const std::vector<Real>& as);

struct RungeReport {
  Real sup_error;           // sup_L |Psi(x)(z) / Lambda(x) - 1/(z - lambda)|
  Real approximation_error;  // sup_L |Psi(x)(z) - a0/(z - lambda_n)|
  Real residual;            // ||T x - lambda_n x||
  Complex a0;               // Lambda(x)
  Complex lambda_n;
};

/// x = approximate eigenvector at lambda_n (default lambda), which must have
/// residual <= 1/n^3.
RungeReport runge_range_check(const MatrixOperator& t, const DualFunctional& lambda, Complex lambda0, int n,
                              const std::vector<Complex>& samples, std::optional<Complex> lambda_n = std::nullopt);

}  // namespace dynlab
