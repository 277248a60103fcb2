#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dynlab/density.hpp"
#include "dynlab/error.hpp"
#include "dynlab/exptype.hpp"
#include "support.hpp"

using namespace dynlab;

namespace {

std::vector<Real> radii_to(Real r_max, int count) {
  std::vector<Real> r;
  for (int k = 1; k <= count; ++k) r.push_back(r_max * k / count);
  return r;
}

// Literal recursion n_j = min{n in N : n_{j-1} + t0 < n}.
std::vector<std::int64_t> thin_oracle(const std::vector<std::int64_t>& n, Real t0) {
  std::vector<std::int64_t> out;
  for (auto v : n)
    if (out.empty() || out.back() + t0 < v) out.push_back(v);
  return out;
}

std::int64_t count_upto(const std::vector<std::int64_t>& v, std::int64_t r) {
  return std::upper_bound(v.begin(), v.end(), r) - v.begin();
}

}  // namespace

TEST_CASE("IndexSequence") {
  CHECK(IndexSequence::naturals().up_to(5) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  const IndexSequence odd({1}, [](std::int64_t n) { return n + 2; });
  CHECK(odd.up_to(9) == std::vector<std::int64_t>{1, 3, 5, 7, 9});
  CHECK(IndexSequence({2, 5, 7}).up_to(100) == std::vector<std::int64_t>{2, 5, 7});
  CHECK_THROWS_AS(IndexSequence({3, 3}), Error);
  CHECK_THROWS_AS(IndexSequence({0, 1}), Error);
  CHECK_THROWS_AS(IndexSequence({1}, [](std::int64_t n) { return n; }).up_to(10), Error);
}

TEST_CASE("lower_density_estimate") {
  const auto r = radii_to(1e4L, 100);
  CHECK(std::abs(lower_density_estimate(IndexSequence::naturals(), r) - 1) < 1e-3L);
  CHECK(std::abs(lower_density_estimate(IndexSequence({2}, [](std::int64_t n) { return n + 2; }), r) - 0.5L) < 1e-3L);
  const IndexSequence squares({1}, [](std::int64_t n) {
    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return (s + 1) * (s + 1);
  });
  const Real d = lower_density_estimate(squares, r);
  CHECK(d <= 0.02L);
  CHECK(std::abs(d - 0.01L) < 1e-3L);
  CHECK_THROWS_AS(lower_density_estimate(IndexSequence::naturals(), {}), Error);
}

TEST_CASE("thin_sequence") {
  const auto thinned = thin_sequence(IndexSequence::naturals(), 3, 20).prefix();
  CHECK(thinned == std::vector<std::int64_t>{1, 5, 9, 13, 17});
  const IndexSequence sparse({1, 10, 30, 31 + 20});
  CHECK(thin_sequence(sparse, 5, 100).prefix() == sparse.prefix());
  CHECK(thin_sequence(IndexSequence::naturals(), 0.5L, 50).prefix() == IndexSequence::naturals().up_to(50));

  SUBCASE("gap property and counting bound on random sequences") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> gap(1, 6);
    std::uniform_real_distribution<double> t(0.3, 12);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> seq{gap(rng)};
      while (seq.back() < 5000) seq.push_back(seq.back() + gap(rng));
      const Real t0 = t(rng);
      const auto out = thin_sequence(IndexSequence(seq), t0, 5000).prefix();
      CHECK(out == thin_oracle(IndexSequence(seq).up_to(5000), t0));
      for (std::size_t j = 1; j < out.size(); ++j) CHECK(out[j] - out[j - 1] > t0);
      const auto denom = static_cast<Real>(std::floor(t0) + 1);
      for (std::int64_t r = 1; r <= 5000; r += 7)
        CHECK(static_cast<Real>(count_upto(out, r)) >= static_cast<Real>(count_upto(seq, r)) / denom - 1);
    }
  }
}

TEST_CASE("real_imag_parts") {
  SUBCASE("h = e_i gives cos and sin") {
    const auto [re, im] = real_imag_parts(ExpPolynomial::exponential(kI));
    for (int k = 0; k < 20; ++k) {
      const Real x = -5 + 0.5L * k;
      CHECK(std::abs(re(x) - Complex(std::cos(x))) < 1e-15L);
      CHECK(std::abs(im(x) - Complex(std::sin(x))) < 1e-15L);
    }
  }
  SUBCASE("real data") {
    const auto h = ExpPolynomial::exponential(2, 3) + ExpPolynomial::polynomial({1, -2});
    const auto [re, im] = real_imag_parts(h);
    CHECK(re == h);
    CHECK(im.is_zero());
  }
  SUBCASE("random h: pointwise parts and frequency moduli") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
      const auto h = testing::random_exp_polynomial(rng);
      const auto [re, im] = real_imag_parts(h);
      Real max_h = 0;
      for (const auto& a : h.frequencies()) max_h = std::max(max_h, std::abs(a));
      for (const auto* part : {&re, &im})
        for (const auto& a : part->frequencies()) CHECK(std::abs(a) <= max_h + 1e-15L);
      std::uniform_real_distribution<double> xs(-3, 3);
      for (int k = 0; k < 100; ++k) {
        const Real x = xs(rng);
        const Complex v = h(x);
        CHECK(std::abs(re(x) - Complex(v.real())) < 1e-10L);
        CHECK(std::abs(im(x) - Complex(v.imag())) < 1e-10L);
      }
    }
  }
}

TEST_CASE("quadrant_phase_targets") {
  const auto t = quadrant_phase_targets({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  CHECK(t == PhaseVector{3 * kPi / 4, 5 * kPi / 4, kPi / 4, 7 * kPi / 4});
  try {
    quadrant_phase_targets({{1, 0}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroSign);
  }
}

TEST_CASE("left_halfplane_check") {
  CHECK(left_halfplane_check(Complex(1, 1), 3 * kPi / 4, 3 * kPi / 4));
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code([] { left_halfplane_check(1, kPi, kPi); }) == Errc::PreconditionViolated);
  CHECK(code([] { left_halfplane_check(Complex(1, 1), 0, 3 * kPi / 4); }) == Errc::PreconditionViolated);
  CHECK(code([] { left_halfplane_check(Complex(1, 1), kPi / 4, kPi / 4); }) == Errc::PreconditionViolated);
  CHECK(code([] { left_halfplane_check(0, kPi / 4, kPi / 4); }) == Errc::PreconditionViolated);

  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> mag(1e-6, 10), quarter(1e-9, M_PI / 2 - 1e-9), jitter(-1, 1);
  const Real reach = 2 * std::asin(Real(0.25));
  for (int trial = 0; trial < 2000; ++trial) {
    const int q = trial % 4;
    const Complex h = std::polar(Real(mag(rng)), Real(quarter(rng)) + q * kPi / 2);
    const Real beta = quadrant_phase_targets({{h.real() > 0 ? 1 : -1, h.imag() > 0 ? 1 : -1}})[0];
    const Real theta = beta + jitter(rng) * reach * (1 - 1e-9L);
    CHECK(left_halfplane_check(h, theta, beta));
  }
}

TEST_CASE("window_orbit_test") {
  const auto n = IndexSequence::naturals();
  const auto one = window_orbit_test(ExpPolynomial::constant(1), 2, n, 20);
  CHECK(std::all_of(one.begin(), one.end(), [](bool b) { return b; }));
  const auto decay = window_orbit_test(ExpPolynomial::exponential(-1), 2, n, 20);
  CHECK(decay.size() == 20);
  CHECK(std::none_of(decay.begin(), decay.end(), [](bool b) { return b; }));
  const auto cosine = ExpPolynomial::constant(1) + (ExpPolynomial::exponential(kI) + ExpPolynomial::exponential(-kI)) *
                                                       Complex(0.2L);
  const auto wobble = window_orbit_test(cosine, 7, n, 50);
  CHECK(std::all_of(wobble.begin(), wobble.end(), [](bool b) { return b; }));
  const auto strict = window_orbit_test(cosine, 7, n, 50, 0.3L);
  CHECK(std::none_of(strict.begin(), strict.end(), [](bool b) { return b; }));
  CHECK_THROWS_AS(window_orbit_test(cosine, 7, n, 5, 1.5L), Error);
}

TEST_CASE("zero_window_scan") {
  const auto cosine = (ExpPolynomial::exponential(kI) + ExpPolynomial::exponential(-kI)) * Complex(0.5L);
  const auto z = zero_window_scan(cosine, 1, 2);
  REQUIRE(z);
  CHECK(std::abs(*z - kPi / 2) < 1e-10L);
  CHECK_FALSE(zero_window_scan(ExpPolynomial::constant(1), 0, 10));
  const auto lin = zero_window_scan(ExpPolynomial::polynomial({-5, 1}), 4, 6);
  REQUIRE(lin);
  CHECK(std::abs(*lin - 5) < 1e-10L);
  // double zero of (x - 5)^2 has no sign change
  CHECK_FALSE(zero_window_scan(ExpPolynomial::polynomial({25, -10, 1}), 4, 6.01L));
  try {
    zero_window_scan(ExpPolynomial::exponential(kI), 0, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRealValued);
  }
}

TEST_CASE("window_zero_certificate") {
  const std::vector<ExpPolynomial> h{ExpPolynomial::constant(Complex(1, 1)), ExpPolynomial::exponential(kI)};
  const auto cert = window_zero_certificate(h, 1, 1);
  REQUIRE(cert);
  CHECK(cert->index == 1);
  CHECK(cert->part == Part::Real);
  CHECK(std::abs(cert->location - kPi / 2) < 1e-10L);
  CHECK(cert->location >= cert->lo);
  CHECK(cert->location <= cert->hi);
  const auto im = window_zero_certificate(h, 3, 0.5L);
  REQUIRE(im);
  CHECK(im->part == Part::Imaginary);
  CHECK(std::abs(im->location - kPi) < 1e-10L);
  CHECK_FALSE(window_zero_certificate(h, 2, 0.5L));
}

TEST_CASE("type_vs_zero_density_report") {
  std::vector<std::pair<Real, Real>> windows;
  for (int k = 0; k < 100; ++k) windows.emplace_back(k, k + 1);
  const auto radii = radii_to(200, 64);

  const auto zero = type_vs_zero_density_report(ExpPolynomial{}, windows, radii);
  CHECK(zero.degenerate);
  CHECK(zero.windows_with_zero == windows.size());
  CHECK(zero.flag);

  const auto sine = (ExpPolynomial::exponential(kI) - ExpPolynomial::exponential(-kI)) * Complex(0, -0.5L);
  const auto s = type_vs_zero_density_report(sine, windows, radii);
  CHECK(std::abs(s.type_estimate - 1) < 0.05L);
  // windows [k, k+1] containing a multiple of pi
  std::size_t expected = 0;
  for (int k = 0; k < 100; ++k)
    if (std::floor((k + 1) / kPi) >= std::ceil(k / kPi)) ++expected;
  CHECK(s.windows_with_zero == expected);
  CHECK(std::abs(s.window_hit_density - 1 / kPi) < 0.02L);
  CHECK_FALSE(s.flag);

  const auto one = type_vs_zero_density_report(ExpPolynomial::constant(1), windows, radii);
  CHECK(one.windows_with_zero == 0);
  CHECK_FALSE(one.flag);
}

TEST_CASE("modulation brings clustered frequencies near the origin") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u(-3, 3);
  const Real d = 1, t0 = 2;
  const int m = 3;
  const Real radius = d / (2 * t0 * m);
  for (int trial = 0; trial < 50; ++trial) {
    const Real alpha = u(rng);
    std::vector<ExpTerm> terms;
    for (int k = 0; k < 4; ++k)
      terms.push_back({kI * alpha + testing::random_in_disc(rng, radius * 0.999L), {testing::random_in_disc(rng, 1)}});
    const ExpPolynomial f(std::move(terms));
    const auto g = apply_operator(f, Modulation{-kI * alpha});
    for (const auto& a : g.frequencies()) CHECK(std::abs(a) < radius);
  }
}
