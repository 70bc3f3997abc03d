#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "disclab/grids.hpp"
#include "disclab/random_series.hpp"
#include "disclab/series.hpp"

using namespace disclab;

namespace {

// independent digit oracle: frac(2^n t) via one exponent shift + modf,
// both exact binary operations, then the sign of sin(2 pi frac)
int sign_oracle(int n, double t) {
  double ip = 0.0;
  const double frac = std::modf(std::ldexp(t, n), &ip);
  if (frac == 0.0 || frac == 0.5) return 0;
  return frac < 0.5 ? 1 : -1;
}

std::vector<cplx> random_coeffs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(count);
  for (auto& v : c) v = cplx(uni(gen), uni(gen));
  return c;
}

// E|sum c_k e_k|^4 over independent fair signs, closed form
double fourth_moment(const std::vector<cplx>& c) {
  double sum_sq = 0.0, sum_fourth = 0.0;
  cplx sum_c2{0.0, 0.0};
  for (cplx x : c) {
    sum_sq += std::norm(x);
    sum_fourth += std::norm(x) * std::norm(x);
    sum_c2 += x * x;
  }
  return 2.0 * sum_sq * sum_sq + std::norm(sum_c2) - 2.0 * sum_fourth;
}

double brute_force_ratio(const std::vector<cplx>& c, double p) {
  const std::size_t k = c.size();
  const std::uint64_t patterns = std::uint64_t{1} << k;
  double acc = 0.0, l2 = 0.0;
  for (cplx x : c) l2 += std::norm(x);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < k; ++j) {
      s += ((mask >> j) & 1u) ? c[j] : -c[j];
    }
    acc += std::pow(std::abs(s), p);
  }
  return acc / static_cast<double>(patterns) / std::pow(l2, p / 2.0);
}

}  // namespace

TEST_CASE("sign samples agree with the binary digit oracle") {
  std::mt19937_64 gen(404);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> level(0, 60);
  for (int trial = 0; trial < 1000; ++trial) {
    const double t = uni(gen);
    const int n = level(gen);
    CHECK(rademacher_at(n, t) == sign_oracle(n, t));
  }
  CHECK_THROWS_AS(rademacher_at(-1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(rademacher_at(0, 1.5), std::domain_error);
}

TEST_CASE("a third alternates and a quarter hits the breakpoint set") {
  const SignSequence third = sample_signs(std::size_t{8}, 1.0 / 3.0);
  CHECK_FALSE(third.dyadic_breakpoint);
  CHECK_FALSE(third.seeded);
  CHECK(third.t == 1.0 / 3.0);
  for (std::size_t n = 0; n < 8; ++n) CHECK(third.signs[n] == (n % 2 == 0 ? 1 : -1));

  const SignSequence quarter = sample_signs(std::size_t{8}, 0.25);
  CHECK(quarter.dyadic_breakpoint);
  CHECK(quarter.signs[0] == 1);
  for (std::size_t n = 1; n < 8; ++n) CHECK(quarter.signs[n] == 0);
}

TEST_CASE("seeded sign draws are reproducible and seed-sensitive") {
  const SignSequence a = sample_signs(std::size_t{64}, std::uint64_t{42});
  const SignSequence b = sample_signs(std::size_t{64}, std::uint64_t{42});
  const SignSequence c = sample_signs(std::size_t{64}, std::uint64_t{43});
  CHECK(a.seeded);
  CHECK(a.seed == 42);
  CHECK(a.signs == b.signs);
  CHECK(a.signs != c.signs);
  for (int s : a.signs) CHECK(std::abs(s) == 1);  // no breakpoints in seeded mode
}

TEST_CASE("sign flips act coefficientwise") {
  const CoeffSeries f(std::vector<cplx>{{1.0, 2.0}, {3.0, -1.0}, {0.5, 0.0}});
  const SignSequence s = sample_signs(std::size_t{3}, 1.0 / 3.0);  // +, -, +
  const CoeffSeries g = randomize(f, s);
  CHECK(g.coeff(0) == f.coeff(0));
  CHECK(g.coeff(1) == -f.coeff(1));
  CHECK(g.coeff(2) == f.coeff(2));
  CHECK_THROWS_AS(randomize(f, sample_signs(std::size_t{2}, std::uint64_t{1})), std::invalid_argument);
}

TEST_CASE("the quadratic moment ratio is exactly one") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto c = random_coeffs(10, seed);
    const KhinchineReport rep = khinchine_ratio(c, 2.0);
    CHECK(rep.method == KhinchineReport::Method::exhaustive);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("the fourth moment matches its closed form") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const auto c = random_coeffs(12, seed);
    double l2 = 0.0;
    for (cplx x : c) l2 += std::norm(x);
    const double want = fourth_moment(c) / (l2 * l2);
    CHECK(khinchine_ratio(c, 4.0).ratio == doctest::Approx(want).epsilon(1e-12));
  }
  // two equal coefficients: E|e_1 + e_2|^4 / 4 = 8/4 = 2, exactly
  const std::vector<cplx> pair = {{1.0, 0.0}, {1.0, 0.0}};
  CHECK(khinchine_ratio(pair, 4.0).ratio == 2.0);
}

TEST_CASE("exhaustive enumeration matches an independent brute force") {
  const auto c = random_coeffs(10, 77);
  for (double p : {0.5, 1.0, 3.0}) {
    CHECK(khinchine_ratio(c, p).ratio == doctest::Approx(brute_force_ratio(c, p)).epsilon(1e-13));
  }
}

TEST_CASE("moment ratios ignore coefficient order and a global phase") {
  auto c = random_coeffs(11, 99);
  const double base = khinchine_ratio(c, 1.0).ratio;

  std::vector<cplx> reversed(c.rbegin(), c.rend());
  CHECK(khinchine_ratio(reversed, 1.0).ratio == doctest::Approx(base).epsilon(1e-13));

  std::vector<cplx> rotated = c;
  const cplx phase = std::polar(1.0, 0.7);
  for (auto& v : rotated) v *= phase;
  CHECK(khinchine_ratio(rotated, 1.0).ratio == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("moment ratios sit on the correct side of one") {
  const auto c = random_coeffs(9, 123);
  CHECK(khinchine_ratio(c, 0.5).ratio < 1.0);
  CHECK(khinchine_ratio(c, 1.0).ratio < 1.0);
  CHECK(khinchine_ratio(c, 3.0).ratio > 1.0);
  CHECK(khinchine_ratio(c, 4.0).ratio > 1.0);
}

TEST_CASE("estimation switches to sampling past the enumeration cap") {
  const std::vector<cplx> c20(20, cplx{1.0, 0.0});
  CHECK(khinchine_ratio(c20, 1.0).method == KhinchineReport::Method::exhaustive);

  const std::vector<cplx> c21(21, cplx{1.0, 0.0});
  CHECK_THROWS_AS(khinchine_ratio(c21, 1.0), std::invalid_argument);  // needs explicit trials
  const KhinchineReport mc = khinchine_ratio(c21, 1.0, 5000, 7);
  CHECK(mc.method == KhinchineReport::Method::monte_carlo);
  CHECK(mc.trials == 5000);
  // same seed reproduces; a Monte Carlo mean of a ratio near 0.8 stays in range
  CHECK(khinchine_ratio(c21, 1.0, 5000, 7).ratio == mc.ratio);
  CHECK(mc.ratio > 0.5);
  CHECK(mc.ratio < 1.0);

  CHECK_THROWS_AS(khinchine_ratio(std::vector<cplx>{}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(khinchine_ratio(std::vector<cplx>{{0.0, 0.0}}, 2.0), std::invalid_argument);
}

TEST_CASE("the weighted tail integral matches its closed form for the identity map") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(16, 8);
  const CircleGrid cg(64);
  const CoeffSeries f(std::vector<cplx>{{0.0, 0.0}, {1.0, 0.0}});  // f' = 1

  // power 0: integrand (1-r), linear, midpoint-exact
  const double b = rg.r_max();
  const NormEstimate flat = duren_weight_integral(f, 0.0, rg, cg);
  CHECK(flat.value == doctest::Approx(b - b * b / 2.0).epsilon(1e-12));

  // power 2: int_0^b u log^2(1/u) du = b^2/4 (2 log^2(1/b) + 2 log(1/b) + 1) at b=1,
  // minus a 2^-16 tail that is far below the quadrature tolerance
  const NormEstimate logged = duren_weight_integral(f, 2.0, rg, cg);
  CHECK(logged.value == doctest::Approx(0.25).epsilon(2e-3));
  CHECK_THROWS_AS(duren_weight_integral(f, -1.0, rg, cg), std::invalid_argument);
}

TEST_CASE("the coefficient log sum skips the first two frequencies") {
  const CoeffSeries f(std::vector<cplx>{{5.0, 0.0}, {4.0, 0.0}, {1.0, 1.0}, {0.0, 2.0}});
  double want = 0.0;
  for (std::int64_t n = 2; n <= 3; ++n) {
    want += std::norm(f.coeff(n)) * std::pow(std::log(static_cast<double>(n)), 3.0);
  }
  CHECK(coefficient_log_sum(f, 3.0) == doctest::Approx(want).epsilon(1e-14));
  CHECK(coefficient_log_sum(CoeffSeries(std::vector<cplx>{{1.0, 0.0}, {1.0, 0.0}}), 2.0) == 0.0);
  CHECK_THROWS_AS(coefficient_log_sum(f, -0.5), std::invalid_argument);
}
