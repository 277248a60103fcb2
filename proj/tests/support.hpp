#pragma once

#include <random>
#include <vector>

#include "dynlab/exp_polynomial.hpp"
#include "dynlab/gate.hpp"
#include "dynlab/resolvent.hpp"

namespace dynlab::testing {

inline Complex random_in_disc(std::mt19937_64& rng, Real radius) {
  std::uniform_real_distribution<double> u(-1, 1);
  for (;;) {
    Complex z{u(rng), u(rng)};
    if (std::abs(z) <= 1) return z * radius;
  }
}

/// Frequencies in |alpha| <= max_modulus, pairwise at least min_gap apart.
inline std::vector<Complex> separated_points(std::mt19937_64& rng, int count, Real max_modulus, Real min_gap) {
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < count) {
    const Complex c = random_in_disc(rng, max_modulus);
    bool ok = true;
    for (const auto& p : pts) ok = ok && std::abs(p - c) >= min_gap;
    if (ok) pts.push_back(c);
  }
  return pts;
}

/// Random exponential polynomial: up to max_terms terms, degree <= max_degree,
/// coefficients in the unit disc, frequencies from `frequencies`.
inline ExpPolynomial random_exp_polynomial(std::mt19937_64& rng, const std::vector<Complex>& frequencies,
                                           int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<ExpTerm> terms;
  for (const auto& a : frequencies) {
    ExpTerm t{a, {}};
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) t.coefficients.push_back(random_in_disc(rng, 1));
    terms.push_back(std::move(t));
  }
  return ExpPolynomial(std::move(terms));
}

inline ExpPolynomial random_exp_polynomial(std::mt19937_64& rng, int max_terms = 5, int max_degree = 3,
                                           Real max_modulus = 3, Real min_gap = 0.25) {
  std::uniform_int_distribution<int> count(1, max_terms);
  return random_exp_polynomial(rng, separated_points(rng, count(rng), max_modulus, min_gap), max_degree);
}

inline CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

inline CVector random_unit_vector(std::mt19937_64& rng, Eigen::Index n) {
  const CVector v = random_vector(rng, n);
  return v / v.norm();
}

/// Gaussian matrix rescaled so that its spectral radius equals rho.
inline MatrixOperator random_matrix(std::mt19937_64& rng, Eigen::Index n, Real rho) {
  CMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a.col(j) = random_vector(rng, n);
  const Real r = MatrixOperator(a).spectral_radius();
  return MatrixOperator(a * (rho / r));
}

inline CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  CMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a.col(j) = random_vector(rng, n);
  Eigen::HouseholderQR<CMatrix> qr(a);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

/// U diag(eigenvalues) U^* for a random unitary U.
inline MatrixOperator random_normal(std::mt19937_64& rng, const std::vector<Complex>& eigenvalues) {
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  const CMatrix u = random_unitary(rng, n);
  CVector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = eigenvalues[static_cast<std::size_t>(i)];
  return MatrixOperator(u * d.asDiagonal() * u.adjoint());
}

/// Clopen component whose circle intersection is exactly the given angles:
/// the hull of the origin and the corresponding unit points.
inline SpectrumComponent angle_component(const std::vector<std::string>& angles, bool clopen = true) {
  SpectrumComponent c{ConvexCompact::disc(0, 0.5L), clopen, {}};
  std::vector<Complex> pts{0};
  for (const auto& a : angles) {
    c.circle_angles.push_back(AngleExpr::parse(a));
    pts.push_back(std::polar<Real>(1, c.circle_angles.back().value()));
  }
  if (!angles.empty()) c.region = ConvexCompact::hull(pts);
  return c;
}

inline SpectrumDescription angle_spectrum(const std::vector<std::string>& angles) {
  return SpectrumDescription{{angle_component(angles)}};
}

}  // namespace dynlab::testing
