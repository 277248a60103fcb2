#include <doctest.h>

#include <cmath>
#include <random>

#include "dynlab/error.hpp"
#include "dynlab/resolvent.hpp"
#include "support.hpp"

using namespace dynlab;

namespace {

CMatrix scalar(Complex l) {
  CMatrix m(1, 1);
  m(0, 0) = l;
  return m;
}

CVector vec(std::initializer_list<Complex> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

std::vector<Complex> circle(Real r, int count, Real phase = 0.1L) {
  std::vector<Complex> pts;
  for (int k = 0; k < count; ++k) pts.push_back(std::polar(r, phase + kTwoPi * k / count));
  return pts;
}

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("resolvent_series and resolvent_direct on closed forms") {
  const Complex l(0.3L, -0.4L);
  const MatrixOperator t(scalar(l));
  const DualFunctional id(vec({1}));
  const auto x = vec({1});
  for (const auto& z : circle(2, 8)) {
    CHECK(std::abs(resolvent_series(t, id, x, z) - Real(1) / (z - l)) < 1e-15L);
    CHECK(std::abs(resolvent_direct(t, id, x, z) - Real(1) / (z - l)) < 1e-17L);
  }

  const MatrixOperator zero(CMatrix::Zero(3, 3));
  const DualFunctional lam(vec({1, Complex(0, 2), -1}));
  const auto y = vec({0.5L, 1, Complex(0, 1)});
  const Complex z(0.7L, 0.2L);
  CHECK(std::abs(resolvent_series(zero, lam, y, z) - lam(y) / z) < 1e-17L);

  // diagonal T: sum_k Lambda_k x_k / (z - lambda_k)
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 0.5L;
  d(1, 1) = Complex(0, -0.2L);
  d(2, 2) = -0.9L;
  const MatrixOperator diag(d);
  for (const auto& w : circle(1.5L, 10)) {
    Complex expect = 0;
    for (int k = 0; k < 3; ++k) expect += lam.coefficients()(k) * y(k) / (w - d(k, k));
    CHECK(std::abs(resolvent_direct(diag, lam, y, w) - expect) < 1e-17L);
  }

  CHECK(code_of([&] { resolvent_series(t, id, x, 0.5L); }) == Errc::InsideSpectralRadius);
  CHECK(code_of([&] { resolvent_direct(t, id, x, l); }) == Errc::SingularSystem);
  CHECK(code_of([&] { resolvent_series(t, id, x, 2, 1e-15L, 0.05L); }) == Errc::InvalidArgument);
}

TEST_CASE("series matches direct solve on random matrices") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = testing::random_matrix(rng, 8, 1);
    const DualFunctional lam(testing::random_vector(rng, 8));
    const auto x = testing::random_vector(rng, 8);
    for (const auto& z : circle(2, 5, trial * 0.1L))
      CHECK(std::abs(resolvent_series(t, lam, x, z) - resolvent_direct(t, lam, x, z)) < 1e-8L);
  }
}

TEST_CASE("LaurentTail and shift_B") {
  const Complex l(0.6L, 0.3L);
  const auto f = LaurentTail::resolvent_of(l);
  const auto bf = shift_B(f);
  for (std::size_t n = 0; n < 30; ++n) CHECK(std::abs(bf.coefficient(n) - l * f.coefficient(n)) < 1e-18L);
  const Complex z(1.5L, -0.5L);
  CHECK(std::abs(f(z) - Real(1) / (z - l)) < 1e-16L);
  CHECK(std::abs(bf(z) - (z * f(z) - f.coefficient(0))) < 1e-15L);

  const LaurentTail finite({1, 2, 3}, 0);
  const auto shifted = shift_B(finite);
  CHECK(shifted.finite_size() == 2);
  CHECK(shifted.coefficient(0) == Complex(2));
  CHECK(shifted.coefficient(1) == Complex(3));
  CHECK(shifted.coefficient(5) == Complex(0));
  const auto empty = shift_B(LaurentTail(std::vector<Complex>{}, 0));
  CHECK(empty.finite_size() == 0);
  CHECK(empty(Complex(2)) == Complex(0));
}

TEST_CASE("psi_tail coefficients and shift intertwining") {
  std::mt19937_64 rng(103);
  const auto t = testing::random_matrix(rng, 5, 0.8L);
  const DualFunctional lam(testing::random_vector(rng, 5));
  const auto x = testing::random_vector(rng, 5);
  const auto psi = psi_tail(t, lam, x);
  const auto psi_tx = psi_tail(t, lam, CVector(t.matrix() * x));
  const auto b_psi = shift_B(psi);
  for (std::size_t n = 0; n < 10; ++n) CHECK(std::abs(psi_tx.coefficient(n) - b_psi.coefficient(n)) < 1e-15L);
  const Complex z(1.8L, 0.4L);
  CHECK(std::abs(psi(z) - resolvent_direct(t, lam, x, z)) < 1e-12L);
}

TEST_CASE("quasi_conjugacy_residual") {
  const MatrixOperator one(scalar(Complex(0.5L, 0.5L)));
  CHECK(quasi_conjugacy_residual(one, DualFunctional(vec({1})), vec({1}), circle(2, 20)) < 1e-17L);

  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = testing::random_matrix(rng, 8, 1);
    const DualFunctional lam(testing::random_vector(rng, 8));
    CHECK(quasi_conjugacy_residual(t, lam, testing::random_vector(rng, 8), circle(2, 20)) < 1e-8L);
  }
  const auto shift = MatrixOperator::weighted_backward_shift(10, 0.5L);
  CHECK(shift.spectral_radius() < 1e-6L);
  CHECK(quasi_conjugacy_residual(shift, DualFunctional(testing::random_vector(rng, 10)), testing::random_vector(rng, 10),
                                 circle(2, 20)) < 1e-8L);
  CHECK(code_of([&] { quasi_conjugacy_residual(one, DualFunctional(vec({1})), vec({1}), {Complex(0.5L)}); }) ==
        Errc::InsideSpectralRadius);
}

TEST_CASE("approximate_eigenvector") {
  std::mt19937_64 rng(109);
  SUBCASE("exact eigenvalue of a diagonalizable matrix") {
    const auto t = testing::random_matrix(rng, 6, 1);
    const auto ev = approximate_eigenvector(t, t.eigenvalues()[2]);
    CHECK(ev.residual < 1e-10L);
    CHECK(std::abs(ev.x.norm() - 1) < 1e-15L);
    CHECK((t.matrix() * ev.x - t.eigenvalues()[2] * ev.x).norm() < 1e-10L);
  }
  SUBCASE("Jordan block kernel vector") {
    CMatrix j = CMatrix::Zero(2, 2);
    j(0, 1) = 1;
    const auto ev = approximate_eigenvector(MatrixOperator(j), 0);
    CHECK(ev.residual < 1e-18L);
    CHECK(std::abs(ev.x(0) - Complex(1)) < 1e-18L);
    CHECK(std::abs(ev.x(1)) < 1e-18L);
  }
  SUBCASE("normal matrix: residual equals the distance to the spectrum") {
    const std::vector<Complex> eigs{0.9L, Complex(0, 0.5L), -0.3L, Complex(0.2L, -0.7L), 0.05L};
    const auto t = testing::random_normal(rng, eigs);
    for (const auto& l : {Complex(0.95L, 0.01L), Complex(0, 0), Complex(2, 2)}) {
      const auto ev = approximate_eigenvector(t, l);
      Real dist = 1e9L;
      for (const auto& e : eigs) dist = std::min(dist, std::abs(l - e));
      CHECK(std::abs(ev.residual - dist) < 1e-10L);
    }
  }
}

TEST_CASE("ball_functional_finite") {
  std::mt19937_64 rng(113);
  SUBCASE("single vector with a = 1 returns its dual") {
    const auto x = testing::random_unit_vector(rng, 4);
    const auto lam = ball_functional_finite({x}, {1});
    CHECK((lam.coefficients() - DualFunctional::dual_of(x).coefficients()).norm() < 1e-12L);
    CHECK(std::abs(std::abs(lam(x)) - 1) < 1e-12L);
  }
  SUBCASE("orthonormal vectors with a = 1/k") {
    const int k = 4;
    const CMatrix u = testing::random_unitary(rng, 6);
    std::vector<CVector> xs;
    for (int j = 0; j < k; ++j) xs.push_back(u.col(j));
    CVector c = CVector::Zero(6);
    for (const auto& x : xs) c += DualFunctional::dual_of(x).coefficients();
    const DualFunctional direct(c / std::sqrt(Real(k)));
    CHECK(std::abs(direct.norm() - 1) < 1e-15L);
    for (const auto& x : xs) CHECK(std::abs(direct(x)) >= 1.0L / k);
    const auto lam = ball_functional_finite(xs, std::vector<Real>(k, 1.0L / k));
    CHECK(lam.norm() <= 1 + 1e-8L);
    for (const auto& x : xs) CHECK(std::abs(lam(x)) >= 1.0L / k - 1e-8L);
  }
  SUBCASE("random instances with sum 0.9") {
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<CVector> xs;
      std::vector<Real> as;
      Real total = 0;
      for (int j = 0; j < 6; ++j) {
        xs.push_back(testing::random_unit_vector(rng, 3));
        as.push_back(u(rng));
        total += as.back();
      }
      for (auto& a : as) a *= 0.9L / total;
      const auto lam = ball_functional_finite(xs, as);
      CHECK(lam.norm() <= 1 + 1e-8L);
      for (int j = 0; j < 6; ++j) CHECK(std::abs(lam(xs[j])) >= as[j] - 1e-8L);
    }
  }
  SUBCASE("collinear vectors with sum 1 sit at the boundary") {
    const auto x = testing::random_unit_vector(rng, 3);
    const auto lam = ball_functional_finite({x, CVector(x * kI), CVector(-x)}, {0.5L, 0.3L, 0.2L});
    CHECK(lam.norm() <= 1 + 1e-8L);
  }
  SUBCASE("errors") {
    std::vector<CVector> many(13, testing::random_unit_vector(rng, 2));
    CHECK(code_of([&] { ball_functional_finite(many, std::vector<Real>(13, 0.01L)); }) ==
          Errc::EnumerationCapExceeded);
    CHECK(code_of([&] { ball_functional_finite({vec({1, 1})}, {0.5L}); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { ball_functional_finite({vec({1}), vec({1})}, {0.6L, 0.6L}); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("runge_range_check") {
  std::mt19937_64 rng(127);
  const auto samples = circle(3, 24);
  SUBCASE("exact eigenvector of a diagonal matrix") {
    CMatrix d = CMatrix::Zero(4, 4);
    d.diagonal() << 1, Complex(0, 1), -0.5L, 0.25L;
    const MatrixOperator t(d);
    const auto r = runge_range_check(t, DualFunctional(testing::random_vector(rng, 4)), Complex(0, 1), 5, samples);
    CHECK(r.sup_error < 1e-10L);
    CHECK(r.approximation_error < 1e-10L);
  }
  SUBCASE("approaching eigenvalues give an O(1/n) trend") {
    const Complex l(0.8L, 0.6L);
    std::vector<Complex> eigs{l, -0.5L, Complex(0, -0.7L)};
    for (int n : {2, 4, 8, 16}) eigs.push_back(l + Complex(1.0L / n, 0));
    eigs.push_back(Complex(-0.2L, 0.3L));
    const auto t = testing::random_normal(rng, eigs);
    std::vector<CVector> xs;
    std::vector<Real> as;
    for (int n : {2, 4, 8, 16}) {
      xs.push_back(approximate_eigenvector(t, l + Complex(1.0L / n, 0)).x);
      as.push_back(1.0L / (n * n));
    }
    const auto lam = ball_functional_finite(xs, as);
    Real previous = 1e9L;
    for (int n : {2, 4, 8, 16}) {
      const auto r = runge_range_check(t, lam, l, n, samples, l + Complex(1.0L / n, 0));
      CHECK(r.sup_error < previous);
      CHECK(r.sup_error * n > 0.05L);
      CHECK(r.sup_error * n < 1);
      CHECK(r.approximation_error < 1e-10L);
      previous = r.sup_error;
    }
    // far sample set: errors shrink with the distance
    const auto far = runge_range_check(t, lam, l, 4, circle(11, 24), l + Complex(0.25L, 0));
    const auto near = runge_range_check(t, lam, l, 4, samples, l + Complex(0.25L, 0));
    CHECK(far.sup_error < near.sup_error / 10);
  }
  SUBCASE("errors") {
    const MatrixOperator t(scalar(0.5L));
    CHECK(code_of([&] { runge_range_check(t, DualFunctional(vec({1})), 0.5L, 2, samples, Complex(0.9L)); }) ==
          Errc::PreconditionViolated);
    CHECK(code_of([&] { runge_range_check(t, DualFunctional(vec({1e-13L})), 0.5L, 2, samples); }) ==
          Errc::FunctionalVanishes);
  }
}
