#include "disclab/random_series.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace disclab {

int rademacher_at(int n, double t) {
  if (n < 0) throw std::invalid_argument("rademacher_at: need n >= 0");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("rademacher_at: need 0 <= t <= 1");
  // frac(2^n t): doubling a double is exact, and subtracting 1 from [1,2) is
  // exact (Sterbenz), so x is the true fractional part all the way down
  double x = t;
  for (int i = 0; i < n; ++i) {
    x *= 2.0;
    if (x >= 1.0) x -= 1.0;
  }
  if (x == 0.0 || x == 0.5 || x == 1.0) return 0;
  return x < 0.5 ? 1 : -1;
}

SignSequence sample_signs(std::size_t count, double t) {
  SignSequence s;
  s.seeded = false;
  s.t = t;
  s.signs.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const int v = rademacher_at(static_cast<int>(n), t);
    if (v == 0) s.dyadic_breakpoint = true;
    s.signs.push_back(v);
  }
  return s;
}

SignSequence sample_signs(std::size_t count, std::uint64_t seed) {
  SignSequence s;
  s.seeded = true;
  s.seed = seed;
  s.signs.reserve(count);
  std::mt19937_64 gen(seed);
  for (std::size_t n = 0; n < count; ++n) {
    s.signs.push_back((gen() & 1u) ? 1 : -1);
  }
  return s;
}

CoeffSeries randomize(const CoeffSeries& f, const SignSequence& s) {
  const auto c = f.coeffs();
  if (s.signs.size() < c.size()) {
    throw std::invalid_argument("randomize: sign sequence shorter than the coefficient vector");
  }
  std::vector<cplx> out(c.begin(), c.end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<double>(s.signs[n]);
  return CoeffSeries(std::move(out));
}

KhinchineReport khinchine_ratio(std::span<const cplx> c, double p, std::int64_t trials,
                                std::uint64_t seed) {
  if (!(p > 0.0)) throw std::invalid_argument("khinchine_ratio: need p > 0");
  if (c.empty()) throw std::invalid_argument("khinchine_ratio: empty coefficient vector");
  double l2 = 0.0;
  for (cplx x : c) l2 += std::norm(x);
  if (l2 == 0.0) throw std::invalid_argument("khinchine_ratio: all coefficients are zero");

  KhinchineReport rep;
  rep.p = p;
  const std::size_t k = c.size();
  if (k <= 20) {
    rep.method = KhinchineReport::Method::exhaustive;
    const std::uint64_t patterns = std::uint64_t{1} << k;
    rep.trials = static_cast<std::int64_t>(patterns);
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      cplx sum{0.0, 0.0};
      for (std::size_t i = 0; i < k; ++i) {
        sum += (mask >> i) & 1u ? -c[i] : c[i];
      }
      acc += p == 2.0 ? std::norm(sum) : std::pow(std::abs(sum), p);
    }
    acc /= static_cast<double>(patterns);
    rep.ratio = acc / std::pow(l2, p / 2.0);
    return rep;
  }

  if (trials < 1) throw std::invalid_argument("khinchine_ratio: need trials >= 1 beyond exhaustive range");
  rep.method = KhinchineReport::Method::monte_carlo;
  rep.trials = trials;
  double acc = 0.0;
  for (std::int64_t tr = 0; tr < trials; ++tr) {
    std::mt19937_64 gen(seed + static_cast<std::uint64_t>(tr));  // per-trial stream: order-independent
    cplx sum{0.0, 0.0};
    std::uint64_t bits = 0;
    int have = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (have == 0) {
        bits = gen();
        have = 64;
      }
      sum += (bits & 1u) ? -c[i] : c[i];
      bits >>= 1;
      --have;
    }
    acc += p == 2.0 ? std::norm(sum) : std::pow(std::abs(sum), p);
  }
  acc /= static_cast<double>(trials);
  rep.ratio = acc / std::pow(l2, p / 2.0);
  return rep;
}

NormEstimate duren_weight_integral(const CoeffSeries& f, double power, const RadialGrid& rg,
                                   const CircleGrid& cg) {
  if (!(power >= 0.0)) throw std::invalid_argument("duren_weight_integral: need power >= 0");
  NormEstimate est;
  est.truncation_degree = f.degree();
  est.grid.circle_points = cg.points();
  est.grid.radial_nodes = static_cast<int>(rg.size());
  est.grid.radial_levels = rg.levels();
  const CoeffSeries fp = derivative(f);
  if (fp.empty()) return est;
  const auto nodes = rg.nodes();
  const auto wts = rg.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    const auto vals = sample_circle(fp, r, cg);
    double sup = 0.0;
    for (const cplx& v : vals) sup = std::max(sup, std::abs(v));
    const double lg = std::log(1.0 / (1.0 - r));
    acc += wts[i] * (1.0 - r) * (power == 0.0 ? 1.0 : std::pow(lg, power)) * sup * sup;
  }
  est.value = acc;
  return est;
}

double coefficient_log_sum(const CoeffSeries& f, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("coefficient_log_sum: need alpha >= 0");
  const auto c = f.coeffs();
  double acc = 0.0;
  for (std::size_t n = 2; n < c.size(); ++n) {
    acc += std::norm(c[n]) * std::pow(std::log(static_cast<double>(n)), alpha);
  }
  return acc;
}

}  // namespace disclab
