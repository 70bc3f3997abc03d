#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "disclab/series.hpp"

using namespace disclab;

namespace {

CoeffSeries random_series(std::int64_t degree, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = cplx(uni(gen), uni(gen));
  return CoeffSeries(std::move(c));
}

// independent power-sum oracle, no Horner
cplx direct_eval(const CoeffSeries& f, cplx z) {
  cplx acc{0.0, 0.0};
  cplx zp{1.0, 0.0};
  for (std::int64_t n = 0; n <= f.degree(); ++n, zp *= z) acc += f.coeff(n) * zp;
  return acc;
}

}  // namespace

TEST_CASE("coefficient access is zero outside the stored range") {
  const CoeffSeries f(std::vector<cplx>{{1.0, 0.0}, {0.0, 2.0}});
  CHECK(f.degree() == 1);
  CHECK(f.coeff(0) == cplx{1.0, 0.0});
  CHECK(f.coeff(1) == cplx{0.0, 2.0});
  CHECK(f.coeff(2) == cplx{0.0, 0.0});
  CHECK(f.coeff(-1) == cplx{0.0, 0.0});
  CHECK(CoeffSeries().empty());
  CHECK_THROWS_AS(CoeffSeries(std::vector<cplx>{{std::nan(""), 0.0}}), std::invalid_argument);
}

TEST_CASE("evaluation agrees with a direct power sum") {
  const CoeffSeries f = random_series(40, 11);
  for (cplx z : {cplx{0.3, 0.4}, cplx{-0.7, 0.0}, cplx{0.0, 0.9}, cplx{0.0, 0.0}}) {
    const cplx got = evaluate(f, z);
    const cplx want = direct_eval(f, z);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("derivative shifts and scales coefficients") {
  const CoeffSeries f = random_series(12, 13);
  const CoeffSeries fp = derivative(f);
  CHECK(fp.degree() == 11);
  for (std::int64_t n = 0; n <= 11; ++n) {
    CHECK(fp.coeff(n) == static_cast<double>(n + 1) * f.coeff(n + 1));
  }
  CHECK(derivative(CoeffSeries(std::vector<cplx>{{3.0, 0.0}})).empty());
}

TEST_CASE("cauchy product multiplies the functions") {
  const CoeffSeries f = random_series(17, 17);
  const CoeffSeries g = random_series(9, 19);
  const CoeffSeries fg = cauchy_product(f, g);
  CHECK(fg.degree() == 26);
  for (cplx z : {cplx{0.5, -0.2}, cplx{-0.3, 0.6}}) {
    const cplx want = evaluate(f, z) * evaluate(g, z);
    CHECK(std::abs(evaluate(fg, z) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("multiplying by one is coefficientwise exact") {
  const CoeffSeries f = random_series(23, 29);
  const CoeffSeries one(std::vector<cplx>{{1.0, 0.0}});
  const CoeffSeries fg = cauchy_product(one, f);
  REQUIRE(fg.degree() == f.degree());
  for (std::int64_t n = 0; n <= f.degree(); ++n) CHECK(fg.coeff(n) == f.coeff(n));
}

TEST_CASE("mobius series matches the closed-form disc automorphism") {
  const cplx a{0.5, 0.0};
  const CoeffSeries phi = mobius_series(a, 256);
  CHECK(std::abs(evaluate(phi, cplx{0.0, 0.0}) - a) <= 1e-15);
  CHECK(std::abs(evaluate(phi, a)) <= 1e-12);  // phi_a(a) = 0
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    const cplx z = 0.8 * std::polar(1.0, t);
    const cplx want = (a - z) / (1.0 - std::conj(a) * z);
    CHECK(std::abs(evaluate(phi, z) - want) <= 1e-10);
  }
}

TEST_CASE("log kernel series sums to -log(1 - z e^{-i theta})") {
  for (double theta : {0.0, 1.1}) {
    const CoeffSeries f = log_kernel_series(theta, 100);
    CHECK(std::abs(f.coeff(0)) == 0.0);
    for (cplx z : {cplx{0.5, 0.0}, cplx{-0.2, 0.4}}) {
      const cplx want = -std::log(1.0 - z * std::polar(1.0, -theta));
      CHECK(std::abs(evaluate(f, z) - want) <= 1e-12);
    }
  }
}

TEST_CASE("gap spec validates its ratio at construction") {
  CHECK_NOTHROW(LacunarySpec({2, 4, 8}, {1.0, 1.0, 1.0}, 2.0));
  CHECK_THROWS_AS(LacunarySpec({2, 3}, {1.0, 1.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(LacunarySpec({2, 4}, {1.0}, 2.0), std::invalid_argument);  // length mismatch
  CHECK_THROWS_AS(LacunarySpec({2, 4}, {1.0, 1.0}, 1.0), std::invalid_argument);  // ratio must exceed 1
}

TEST_CASE("gap prefix keeps the leading terms") {
  const LacunarySpec s({2, 4, 8, 16}, {{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}}, 2.0);
  const LacunarySpec p = s.prefix(2);
  REQUIRE(p.terms() == 2);
  CHECK(p.indices()[1] == 4);
  CHECK(p.coeffs()[1] == cplx{2.0, 0.0});
}

TEST_CASE("densification places gap coefficients at their frequencies") {
  const LacunarySpec s({2, 4, 8}, {{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}}, 2.0);
  const CoeffSeries f = lacunary_to_dense(s, 6);
  CHECK(f.degree() == 6);
  CHECK(f.coeff(2) == cplx{1.0, 0.0});
  CHECK(f.coeff(4) == cplx{2.0, 0.0});
  CHECK(f.coeff(3) == cplx{0.0, 0.0});
  CHECK(f.coeff(6) == cplx{0.0, 0.0});  // index 8 beyond the cap is dropped
}
