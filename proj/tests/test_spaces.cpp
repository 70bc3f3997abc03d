#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "disclab/grids.hpp"
#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

using namespace disclab;

namespace {

CoeffSeries random_series(std::int64_t degree, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = cplx(uni(gen), uni(gen));
  return CoeffSeries(std::move(c));
}

std::vector<RefinementPoint> trace_of(std::initializer_list<double> values) {
  std::vector<RefinementPoint> t;
  std::int64_t n = 1;
  for (double v : values) t.push_back({n <<= 1, v});
  return t;
}

CoeffSeries scale(const CoeffSeries& f, cplx c) {
  std::vector<cplx> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v *= c;
  return CoeffSeries(std::move(out));
}

}  // namespace

TEST_CASE("space parameter factories validate and label themselves") {
  CHECK(SpaceParams::hardy(2.0).label() == "hardy[p=2]");
  CHECK(SpaceParams::hinfty().label() == "hinfty");
  CHECK(std::isinf(SpaceParams::hinfty().p));
  CHECK(SpaceParams::dirichlet(2.0, 1.0).central_dirichlet());
  CHECK(SpaceParams::dirichlet(3.0, 2.0).central_dirichlet());
  CHECK_FALSE(SpaceParams::dirichlet(2.0, 0.5).central_dirichlet());
  CHECK_THROWS_AS(SpaceParams::hardy(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpaceParams::bergman(2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpaceParams::log_bloch(0.0), std::invalid_argument);
  // labels use ';' between parameters so CSV rows stay one column per field
  CHECK(SpaceParams::bergman(2.0, 0.5).label().find(',') == std::string::npos);
}

TEST_CASE("quadratic mean sup norm is the coefficient sum") {
  const CoeffSeries f = random_series(20, 7);
  const RadialGrid rg = RadialGrid::geometric_midpoint(8, 4);
  const CircleGrid cg(64);  // 64 > 2*20, so the boundary mean is an exact coefficient sum
  double parseval = 0.0;
  for (std::int64_t k = 0; k <= f.degree(); ++k) parseval += std::norm(f.coeff(k));
  const NormEstimate est = hardy_norm(f, 2.0, rg, cg);
  CHECK(est.value == doctest::Approx(std::sqrt(parseval)).epsilon(1e-12));
  CHECK_FALSE(est.diverging);
  CHECK(est.grid.circle_points == 64);
}

TEST_CASE("sup norm of a monomial is attained at the boundary") {
  const CoeffSeries f(std::vector<cplx>{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1.0, 0.0}});
  const RadialGrid rg = RadialGrid::geometric_midpoint(8, 4);
  const CircleGrid cg(32);
  CHECK(hardy_norm(f, std::numeric_limits<double>::infinity(), rg, cg).value ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadratic derivative integral matches its coefficient series") {
  // p=2, alpha=1: seminorm^2 = sum_n 2n/(2n+1) |a_n|^2
  const CoeffSeries f = random_series(12, 21);
  const RadialGrid rg = RadialGrid::geometric_gauss(20, 6);
  const CircleGrid cg(128);
  double want = 0.0;
  for (std::int64_t n = 1; n <= f.degree(); ++n) {
    want += 2.0 * static_cast<double>(n) / (2.0 * static_cast<double>(n) + 1.0) * std::norm(f.coeff(n));
  }
  const NormEstimate sem = dirichlet_seminorm(f, 2.0, 1.0, rg, cg);
  CHECK(sem.value * sem.value == doctest::Approx(want).epsilon(1e-9));

  const NormEstimate full = dirichlet_norm(f, 2.0, 1.0, rg, cg);
  const double want_full = std::sqrt(std::norm(f.coeff(0)) + sem.value * sem.value);
  CHECK(full.value == doctest::Approx(want_full).epsilon(1e-12));
}

TEST_CASE("disc automorphisms have derivative-growth constant one") {
  // (1-|z|^2) |phi_a'(z)| = (1-|z|^2)(1-|a|^2)/|1 - conj(a) z|^2 peaks at z=a
  // with value exactly 1, and never exceeds 1.
  const CoeffSeries phi = mobius_series(cplx{0.5, 0.0}, 256);
  const RadialGrid rg = RadialGrid::geometric_midpoint(12, 64);
  const CircleGrid cg(2048);
  const NormEstimate est = bloch_seminorm(phi, rg, cg);
  CHECK(est.value == doctest::Approx(1.0).epsilon(2e-4));
  CHECK(est.value <= 1.0 + 1e-12);
}

TEST_CASE("derivative-growth seminorms of the identity peak at the origin") {
  const CoeffSeries f(std::vector<cplx>{{0.0, 0.0}, {1.0, 0.0}});  // f = z
  const RadialGrid rg = RadialGrid::geometric_midpoint(10, 8);
  const CircleGrid cg(64);
  // (1-r^2)*1 and (1-r^2)(log(e/(1-r^2)))^1 are both maximal at r = 0
  CHECK(bloch_seminorm(f, rg, cg).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(log_bloch_seminorm(f, 1.0, rg, cg).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(log_bloch_seminorm(f, 0.0, rg, cg), std::invalid_argument);
}

TEST_CASE("box constant of the unit density is the squared outer radius") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(10, 4);
  const CircleGrid cg(256);
  const auto one = [](const DiscPoint&) { return 1.0; };
  const NormEstimate est = carleson_constant(one, 8, rg, cg);
  // level-l box ratio for the unit density is r_max^2 - (1-2^-l)^2, largest at l=0
  CHECK(est.value == doctest::Approx(rg.r_max() * rg.r_max()).epsilon(1e-12));
  CHECK(est.grid.max_box_level == 8);
}

TEST_CASE("log-weighted box constant matches the per-level closed form") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(10, 4);
  const CircleGrid cg(256);
  const auto one = [](const DiscPoint&) { return 1.0; };
  const double power = 2.0;
  const int maxlevel = 8;
  double want = 0.0;
  for (int l = 0; l <= maxlevel; ++l) {
    const double inner = 1.0 - std::ldexp(1.0, -l);
    const double ratio = rg.r_max() * rg.r_max() - inner * inner;
    want = std::max(want, std::pow((l + 1) * std::numbers::ln2, power) * ratio);
  }
  const NormEstimate est = log_carleson_constant(one, power, maxlevel, rg, cg);
  CHECK(est.value == doctest::Approx(want).epsilon(1e-12));
  // power 0 must reproduce the unweighted constant bit for bit
  CHECK(log_carleson_constant(one, 0.0, maxlevel, rg, cg).value ==
        carleson_constant(one, maxlevel, rg, cg).value);
}

TEST_CASE("box sweeps validate their level and grid compatibility") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(10, 4);
  const auto one = [](const DiscPoint&) { return 1.0; };
  CHECK_THROWS_AS(carleson_constant(one, 9, rg, CircleGrid(256)), std::invalid_argument);
  CHECK_THROWS_AS(carleson_constant(one, 4, rg, CircleGrid(100)), std::invalid_argument);
  CHECK_THROWS_AS(carleson_constant(one, -1, rg, CircleGrid(256)), std::invalid_argument);
  CHECK_THROWS_AS(log_carleson_constant(one, -2.0, 4, rg, CircleGrid(256)), std::invalid_argument);
}

TEST_CASE("sampled densities validate shape and sign") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(4, 2);
  const CircleGrid cg(8);
  CHECK_THROWS_AS(SampledDensity(rg, cg, std::vector<double>(3, 1.0)), std::invalid_argument);
  std::vector<double> bad(rg.size() * 8, 1.0);
  bad[5] = -1.0;
  CHECK_THROWS_AS(SampledDensity(rg, cg, bad), std::invalid_argument);
  const SampledDensity d(rg, cg, std::vector<double>(rg.size() * 8, 1.0));
  CHECK(d.disc_integral() == doctest::Approx(rg.r_max() * rg.r_max()).epsilon(1e-13));
}

TEST_CASE("derivative weight density agrees with its pointwise form") {
  const CoeffSeries g = random_series(10, 33);
  const RadialGrid rg = RadialGrid::geometric_midpoint(6, 3);
  const CircleGrid cg(32);
  const SampledDensity fast = SampledDensity::derivative_weight(g, 2.0, rg, cg);
  const auto slow = mu_gq_density(g, 2.0);
  for (std::size_t i = 0; i < rg.size(); i += 5) {
    for (int j = 0; j < 32; j += 7) {
      const DiscPoint z(rg.nodes()[i], cg.angle(j));
      CHECK(fast.value(i, static_cast<std::size_t>(j)) == doctest::Approx(slow(z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("norms scale with the coefficient magnitude") {
  const CoeffSeries f = random_series(16, 55);
  const cplx c{1.5, -0.5};
  const CoeffSeries cf = scale(f, c);
  const RadialGrid rg = RadialGrid::geometric_midpoint(8, 4);
  const CircleGrid cg(256);
  const std::vector<SpaceParams> linear = {
      SpaceParams::hardy(1.0),  SpaceParams::hardy(2.0),   SpaceParams::hinfty(),
      SpaceParams::bergman(2.0, 0.5), SpaceParams::dirichlet(2.0, 1.0),
      SpaceParams::dirichlet(0.5, -0.5), SpaceParams::bloch(), SpaceParams::log_bloch(1.0)};
  for (const SpaceParams& sp : linear) {
    const double base = norm_estimate(f, sp, rg, cg).value;
    const double scaled = norm_estimate(cf, sp, rg, cg).value;
    CAPTURE(sp.label());
    CHECK(scaled == doctest::Approx(std::abs(c) * base).epsilon(1e-10));
  }
  // box constants integrate |g'|^2, so they scale with |c|^2
  for (const SpaceParams& sp : {SpaceParams::bmoa(), SpaceParams::bmoa_log()}) {
    const double base = norm_estimate(f, sp, rg, cg).value;
    const double scaled = norm_estimate(cf, sp, rg, cg).value;
    CAPTURE(sp.label());
    CHECK(scaled == doctest::Approx(std::norm(c) * base).epsilon(1e-10));
  }
}

TEST_CASE("near-boundary growth check") {
  const RadialGrid rg = RadialGrid::geometric_midpoint(10, 8);
  const CircleGrid cg(2048);
  SUBCASE("constants pass trivially") {
    const GrowthReport rep = growth_bound_check(CoeffSeries(std::vector<cplx>{{2.0, 0.0}}), 2.0, rg, cg);
    CHECK(rep.trivial_pass);
  }
  SUBCASE("the log kernel stays within a small multiple of its seminorm") {
    const GrowthReport rep = growth_bound_check(log_kernel_series(0.0, 512), 2.0, rg, cg);
    CHECK_FALSE(rep.trivial_pass);
    CHECK(rep.bloch_norm > 0.0);
    CHECK(rep.sup_ratio > 0.0);
    CHECK(rep.sup_ratio < 10.0);
    REQUIRE_FALSE(rep.samples.empty());
    for (const auto& [r, ratio] : rep.samples) {
      CHECK(r >= 0.5);
      CHECK(std::isfinite(ratio));
    }
  }
}

TEST_CASE("gap membership statistics follow their closed forms") {
  const LacunarySpec s({2, 4, 8, 16}, {{0.5, 0.0}, {0.0, 0.25}, {-0.125, 0.0}, {0.0625, 0.0}}, 2.0);
  const auto& n = s.indices();
  const auto& a = s.coeffs();

  double sum_sq = 0.0, sum_abs = 0.0;
  for (const cplx& c : a) {
    sum_sq += std::norm(c);
    sum_abs += std::abs(c);
  }
  CHECK(lacunary_characteristic(s, SpaceParams::hardy(2.0)) == doctest::Approx(sum_sq).epsilon(1e-14));
  CHECK(lacunary_characteristic(s, SpaceParams::hardy(5.0)) == doctest::Approx(sum_sq).epsilon(1e-14));
  CHECK(lacunary_characteristic(s, SpaceParams::hinfty()) == doctest::Approx(sum_abs).epsilon(1e-14));
  CHECK(lacunary_characteristic(s, SpaceParams::bmoa()) == doctest::Approx(sum_sq).epsilon(1e-14));

  // dirichlet(p, alpha): sum n^(p-alpha-1) |a|^p; p=2, alpha=1 lands on the quadratic sum
  CHECK(lacunary_characteristic(s, SpaceParams::dirichlet(2.0, 1.0)) ==
        doctest::Approx(sum_sq).epsilon(1e-14));
  double d_half = 0.0;
  for (const cplx& c : a) d_half += std::sqrt(std::abs(c));  // exponent p-alpha-1 = 0
  CHECK(lacunary_characteristic(s, SpaceParams::dirichlet(0.5, -0.5)) ==
        doctest::Approx(d_half).epsilon(1e-14));

  double berg = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) berg += std::norm(a[k]) / static_cast<double>(n[k]);
  CHECK(lacunary_characteristic(s, SpaceParams::bergman(2.0, 0.0)) == doctest::Approx(berg).epsilon(1e-14));

  CHECK(lacunary_characteristic(s, SpaceParams::bloch()) == doctest::Approx(0.5).epsilon(1e-15));
  double lb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    lb = std::max(lb, std::abs(a[k]) * std::log(static_cast<double>(n[k])));
  }
  CHECK(lacunary_characteristic(s, SpaceParams::log_bloch(1.0)) == doctest::Approx(lb).epsilon(1e-14));

  // two-log statistic: sup over levels of ((l+1) ln2)^2 * tail quadratic sum past 2^l
  double bl = 0.0;
  for (int level = 0; level <= 5; ++level) {
    double tail = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (n[k] > (std::int64_t{1} << level)) tail += std::norm(a[k]);
    }
    bl = std::max(bl, std::pow((level + 1) * std::numbers::ln2, 2.0) * tail);
  }
  CHECK(lacunary_characteristic(s, SpaceParams::bmoa_log()) == doctest::Approx(bl).epsilon(1e-13));
}

TEST_CASE("trace classification follows the single documented rule") {
  CHECK(classify_trace(trace_of({1.0, 2.0, 4.0})) == Verdict::inconclusive);
  CHECK(classify_trace(trace_of({5.0, 5.0, 5.0, 5.0})) == Verdict::bounded);
  CHECK(classify_trace(trace_of({8.0, 4.0, 2.0, 1.0})) == Verdict::bounded);
  CHECK(classify_trace(trace_of({1.0, 2.0, 4.0, 8.0})) == Verdict::diverging);
  // slow monotone growth in the grey band is still divergence
  CHECK(classify_trace(trace_of({1.0, 1.1, 1.2, 1.3})) == Verdict::diverging);
  // grey band without monotonicity stays undecided
  CHECK(classify_trace(trace_of({1.0, 1.4, 1.2, 1.3})) == Verdict::inconclusive);
  // only the last four points count
  CHECK(classify_trace(trace_of({100.0, 1.0, 1.0, 1.0, 1.0})) == Verdict::bounded);
  CHECK(classify_trace(trace_of({0.0, 0.0, 0.0, 0.0})) == Verdict::bounded);
  // escape from an exactly-zero start is divergence
  CHECK(classify_trace(trace_of({0.0, 0.0, 1.0, 2.0})) == Verdict::diverging);
  CHECK(classify_trace({}) == Verdict::inconclusive);
}

TEST_CASE("refinement studies record the trail they classified") {
  const std::vector<std::int64_t> ns = {4, 8, 16, 32};
  const NormEstimate growing = refinement_study(
      [](std::int64_t n) { return static_cast<double>(n); }, ns);
  CHECK(growing.diverging);
  CHECK(growing.value == 32.0);
  CHECK(growing.truncation_degree == 32);
  REQUIRE(growing.trace.size() == 4);
  CHECK(growing.trace[2].n == 16);
  CHECK(growing.trace[2].value == 16.0);

  const NormEstimate flat = refinement_study([](std::int64_t) { return 3.0; }, ns);
  CHECK_FALSE(flat.diverging);
  CHECK(flat.value == 3.0);
  CHECK_THROWS_AS(refinement_study([](std::int64_t) { return 0.0; }, std::vector<std::int64_t>{}),
                  std::invalid_argument);
}

TEST_CASE("the norm dispatcher routes to the matching estimator") {
  const CoeffSeries f = random_series(10, 77);
  const RadialGrid rg = RadialGrid::geometric_midpoint(8, 4);
  const CircleGrid cg(256);
  CHECK(norm_estimate(f, SpaceParams::hardy(2.0), rg, cg).value == hardy_norm(f, 2.0, rg, cg).value);
  CHECK(norm_estimate(f, SpaceParams::bergman(2.0, 0.0), rg, cg).value ==
        bergman_norm(f, 2.0, 0.0, rg, cg).value);
  CHECK(norm_estimate(f, SpaceParams::dirichlet(2.0, 1.0), rg, cg).value ==
        dirichlet_norm(f, 2.0, 1.0, rg, cg).value);
  CHECK(norm_estimate(f, SpaceParams::bloch(), rg, cg).value == bloch_seminorm(f, rg, cg).value);
  const SampledDensity mu = SampledDensity::derivative_weight(f, 2.0, rg, cg);
  CHECK(norm_estimate(f, SpaceParams::bmoa(), rg, cg, 6).value == carleson_constant(mu, 6).value);
  CHECK(norm_estimate(f, SpaceParams::bmoa_log(), rg, cg, 6).value ==
        log_carleson_constant(mu, 2.0, 6).value);
}
