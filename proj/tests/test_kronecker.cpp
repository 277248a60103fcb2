#include <doctest.h>

#include <cmath>
#include <random>

#include "dynlab/error.hpp"
#include "dynlab/kronecker.hpp"

using namespace dynlab;

namespace {

const Real sqrt2 = std::sqrt(Real{2});
const Real sqrt3 = std::sqrt(Real{3});

using Coeffs = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("kronecker_time examples") {
  SUBCASE("t = 0 already works") {
    const auto t = kronecker_time({1}, {0}, 0.1L, 0, 7);
    REQUIRE(t);
    CHECK(*t == 0);
  }
  SUBCASE("(1, sqrt 2) against a frozen grid oracle") {
    const auto t = kronecker_time({1, sqrt2}, {kPi, 0}, 0.1L, 0, 1e4L);
    REQUIRE(t);
    // first index 2041 of the grid with step 0.1 / (2 sqrt 2 + 1)
    CHECK(std::abs(*t - 53.311710880099628417L) < 1e-15L);
    CHECK(sup_chord({1, sqrt2}, {kPi, 0}, *t) < 0.1L);
  }
  SUBCASE("dependent frequencies never reach (0, pi)") {
    CHECK_FALSE(kronecker_time({1, 2}, {0, kPi}, 0.4L, 0, 1e4L));
    CHECK_FALSE(kronecker_time({1, 2}, {0, kPi}, 0.4L, -5e3L, 123.5L));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(kronecker_time({1}, {0}, 0, 0, 1), Error);
    try {
      kronecker_time({1}, {0}, 2, 0, 1);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidEpsilon);
    }
    CHECK_THROWS_AS(kronecker_time({1}, {0}, 0.1L, 1, 1), Error);
  }
  SUBCASE("returned t is always verified and inside the window") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> phase(0, 2 * M_PI), start(0, 1000);
    for (int trial = 0; trial < 50; ++trial) {
      const PhaseVector beta{phase(rng), phase(rng)};
      const Real lo = start(rng);
      const auto t = kronecker_time({1, sqrt2}, beta, 0.2L, lo, lo + 2000);
      if (!t) continue;
      CHECK(*t >= lo);
      CHECK(*t <= lo + 2000);
      CHECK(sup_chord({1, sqrt2}, beta, *t) < 0.2L);
    }
  }
}

TEST_CASE("uniform_window_t0") {
  SUBCASE("one frequency sweeps the circle every 2 pi") {
    const auto w = uniform_window_t0({1}, 0.5L);
    CHECK(w.t0 <= 4 * kPi + 0.1L);
    CHECK(w.beta_step <= 0.5L);
  }
  SUBCASE("larger eps on the same grid does not increase t0") {
    const Real step = 0.2L;
    const auto a = uniform_window_t0({1, sqrt2}, 0.2L, step);
    const auto b = uniform_window_t0({1, sqrt2}, 0.3L, step);
    const auto c = uniform_window_t0({1, sqrt2}, 0.6L, step);
    CHECK(b.t0 <= a.t0);
    CHECK(c.t0 <= b.t0);
  }
  SUBCASE("windows of length t0 contain a verified t") {
    const FrequencyVector alpha{1, sqrt2};
    const Real eps = 0.2L;
    const auto w = uniform_window_t0(alpha, eps);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> phase(0, 2 * M_PI), start(0, 1e4);
    for (int trial = 0; trial < 100; ++trial) {
      const PhaseVector beta{phase(rng), phase(rng)};
      const Real x = start(rng);
      const auto t = kronecker_time(alpha, beta, eps, x, x + w.t0);
      REQUIRE(t);
      CHECK(sup_chord(alpha, beta, *t) < eps);
    }
  }
  SUBCASE("grid step larger than eps is rejected") { CHECK_THROWS_AS(uniform_window_t0({1}, 0.1L, 0.2L), Error); }
  SUBCASE("dependent frequencies exhaust the search") {
    try {
      uniform_window_t0({1, 1}, 0.5L, std::nullopt, 100'000);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::GridSearchExhausted);
    }
  }
}

TEST_CASE("integer_relation_search examples") {
  auto rel = integer_relation_search({1, 2, 3}, 3, 1e-12L);
  REQUIRE(rel);
  CHECK(rel->coefficients == Coeffs{1, 1, -1});
  CHECK(rel->residual == 0);
  CHECK(rel->kind == RelationKind::Unrestricted);

  rel = integer_relation_search({std::log(Real{2}), std::log(Real{3}), std::log(Real{6})}, 2, 1e-12L);
  REQUIRE(rel);
  CHECK(rel->coefficients == Coeffs{1, 1, -1});

  // Exhaustive oracle: min |c1 + c2 sqrt 2| over the box is 0.01219.
  CHECK_FALSE(integer_relation_search({1, sqrt2}, 50, 1e-9L));
  CHECK(integer_relation_search({1, sqrt2}, 50, 0.0122L));

  CHECK(integer_relation_search({0}, 1, 1e-9L)->coefficients == Coeffs{1});
  CHECK_FALSE(integer_relation_search({kPi / 3 + 1}, 50, 1e-9L));

  try {
    integer_relation_search({1, 2, 3, 4}, 100, 1e-9L, RelationMode::Exhaustive);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchSpaceTooLarge);
  }
}

TEST_CASE("zero_sum_relation_search examples") {
  const auto rel = zero_sum_relation_search({0, 1, 2}, 3, 1e-12L);
  REQUIRE(rel);
  CHECK(rel->coefficients == Coeffs{1, -2, 1});
  CHECK(rel->kind == RelationKind::ZeroSum);
  CHECK_FALSE(zero_sum_relation_search({1, sqrt2}, 50, 1e-9L));
  CHECK_FALSE(zero_sum_relation_search({0}, 50, 1e-9L));
  CHECK_FALSE(zero_sum_relation_search({kPi}, 50, 1e-9L, RelationMode::Lattice));

  SUBCASE("two distinct points never carry a zero-sum relation") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      const Real a = u(rng), b = u(rng);
      if (std::abs(a - b) < 1e-3) continue;
      CHECK_FALSE(zero_sum_relation_search({a, b}, 50, 1e-9L));
    }
  }
}

TEST_CASE("lattice and exhaustive modes agree") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 2;
    FrequencyVector alpha(m);
    for (auto& a : alpha) a = u(rng);
    if (trial % 3 != 0) {
      // plant a relation through the last entry
      Real acc = 0;
      for (std::size_t j = 0; j + 1 < m; ++j) acc += coeff(rng) * alpha[j];
      const int last = 1 + (trial % 4);
      alpha[m - 1] = -acc / last;
    }
    for (auto kind : {0, 1}) {
      auto search = kind ? zero_sum_relation_search : integer_relation_search;
      const auto ex = search(alpha, 12, 1e-12L, RelationMode::Exhaustive);
      const auto la = search(alpha, 12, 1e-12L, RelationMode::Lattice);
      REQUIRE(ex.has_value() == la.has_value());
      if (ex) CHECK(ex->coefficients == la->coefficients);
    }
  }
}

TEST_CASE("lattice mode finds planted relations for m >= 4") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    FrequencyVector alpha{u(rng), u(rng), u(rng), 0};
    alpha[3] = 3 * alpha[0] - 2 * alpha[1] + 5 * alpha[2];
    const auto rel = integer_relation_search(alpha, 50, 1e-12L);
    REQUIRE(rel);
    CHECK(std::abs(rel->residual) < 1e-12L);
    Real check = 0;
    for (std::size_t j = 0; j < 4; ++j) check += rel->coefficients[j] * alpha[j];
    CHECK(std::abs(check) < 1e-12L);
  }
  CHECK_FALSE(integer_relation_search({1, sqrt2, sqrt3, std::sqrt(Real{5})}, 50, 1e-9L));
  const auto rel = integer_relation_search({1, sqrt2, sqrt3, 1 + sqrt2}, 50, 1e-9L);
  REQUIRE(rel);
  CHECK(rel->coefficients == Coeffs{1, 1, 0, -1});
}

TEST_CASE("relation certificates reproduce their residual") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> small(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    FrequencyVector alpha{Real(small(rng)) / 7, Real(small(rng)) / 5, Real(small(rng)) / 3};
    const auto rel = integer_relation_search(alpha, 20, 1e-12L);
    REQUIRE(rel);
    Real sum = 0;
    for (std::size_t j = 0; j < 3; ++j) sum += rel->coefficients[j] * alpha[j];
    CHECK(std::abs(sum) < 1e-12L);
    CHECK(rel->residual < 1e-12L);
  }
}

TEST_CASE("shift_to_independence") {
  const std::vector<Real> candidates{0, 1, -1, 0.5L};
  auto s = shift_to_independence({0, kPi}, 3, {1}, 50, 1e-9L);
  REQUIRE(s);
  CHECK(s->n == 1);
  CHECK(s->r == 1);
  s = shift_to_independence({1, sqrt2}, 3, candidates, 50, 1e-9L);
  REQUIRE(s);
  CHECK(s->n == 1);
  CHECK(s->r == 0);
  s = shift_to_independence({kPi / 3}, 1, {1}, 50, 1e-9L);
  REQUIRE(s);
  CHECK(s->r == 1);
  // zero-sum relations survive every shift
  CHECK_FALSE(shift_to_independence({1, 2, 3}, 4, candidates, 50, 1e-9L));
}

TEST_CASE("pi_rational_detect") {
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(pi_rational_detect(kPi / 2, 100, 1e-12L) == P{1, 2});
  CHECK(pi_rational_detect(3 * kPi / 7, 100, 1e-12L) == P{3, 7});
  CHECK(pi_rational_detect(-5 * kPi / 4, 100, 1e-12L) == P{-5, 4});
  CHECK(pi_rational_detect(0, 1, 1e-12L) == P{0, 1});
  // 1/pi has the convergent 265381/833719 at distance 8.83e-13.
  CHECK(pi_rational_detect(1, 1'000'000, 1e-12L) == P{265381, 833719});
  CHECK_FALSE(pi_rational_detect(1, 1'000'000, 1e-13L));
  CHECK_FALSE(pi_rational_detect(1, 100'000, 1e-12L));
}
