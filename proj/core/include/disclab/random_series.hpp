#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disclab/grids.hpp"
#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

namespace disclab {

/// r_n(t) = sgn(sin(2^{n+1} pi t)) evaluated exactly: the fractional part of
/// 2^n t is computed by n exact binary doublings of the double t, so the
/// result is the true value for the representable t, including the value 0 on
/// dyadic breakpoints.  Requires 0 <= t <= 1 and n >= 0; returns -1, 0 or +1.
int rademacher_at(int n, double t);

struct SignSequence {
  std::vector<int> signs;        // entries in {-1, 0, +1}; 0 only on breakpoints
  bool dyadic_breakpoint = false;  // some r_n(t) hit a breakpoint (measure-zero t)
  bool seeded = false;
  double t = -1.0;               // provenance when !seeded
  std::uint64_t seed = 0;        // provenance when seeded
};

/// First `count` Rademacher values at the point t.
SignSequence sample_signs(std::size_t count, double t);
/// Independent fair signs from a seeded generator (the mode experiments use;
/// every double is dyadic eventually, so t-mode always ends in the flagged
/// measure-zero set when count grows).
SignSequence sample_signs(std::size_t count, std::uint64_t seed);

/// Coefficientwise sign flip: (randomize f)_n = s_n a_n.  Requires
/// len(s) > deg(f).
CoeffSeries randomize(const CoeffSeries& f, const SignSequence& s);

struct KhinchineReport {
  double p = 0.0;
  double ratio = 0.0;  // E|sum c_k r_k|^p / (sum |c_k|^2)^{p/2}
  std::int64_t trials = 0;
  enum class Method { exhaustive, monte_carlo } method = Method::exhaustive;
};

/// Moment ratio of a Rademacher sum.  Exhaustive over all 2^K sign patterns
/// when K <= 20 (then `trials` is ignored), seeded Monte Carlo otherwise.
/// Requires p > 0 and a nonzero coefficient vector.
KhinchineReport khinchine_ratio(std::span<const cplx> c, double p, std::int64_t trials = 0,
                                std::uint64_t seed = 0x9e3779b9u);

/// int_0^{r_max} (1-r) (log 1/(1-r))^power * (sup-grid of |f'| at r)^2 dr on
/// the radial grid.  power >= 0.
NormEstimate duren_weight_integral(const CoeffSeries& f, double power, const RadialGrid& rg,
                                   const CircleGrid& cg);

/// sum_{n>=2} |a_n|^2 (log n)^alpha over the stored coefficients (the n=1
/// term carries the factor log(1)=0 and never contributes).
double coefficient_log_sum(const CoeffSeries& f, double alpha);

}  // namespace disclab
