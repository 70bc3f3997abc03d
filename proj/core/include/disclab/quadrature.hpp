#pragma once

#include <functional>

#include "disclab/grids.hpp"
#include "disclab/series.hpp"

namespace disclab {

/// Outcome of an adaptive 1-D quadrature.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int subdivisions = 0;
};

/// Values f(r e^{i theta_j}) at every angle of the grid.  Exact evaluation
/// semantics at the grid angles: power-of-two grids go through a radix-2
/// transform of the radially scaled coefficients (with index folding mod M,
/// which is exact at these angles), everything else is per-angle Horner.
/// r = 1 is allowed here on purpose: truncated series are polynomials and
/// the boundary restriction is their honest sup/mean limit.
std::vector<cplx> sample_circle(const CoeffSeries& f, double r, const CircleGrid& grid);

/// M_p(r, f) = ((1/M) sum_j |f(r e^{i theta_j})|^p)^{1/p}, normalized measure.
/// Requires p > 0 and 0 <= r < 1.
double integral_mean(const CoeffSeries& f, double p, double r, const CircleGrid& grid);

/// Grid maximum of |f| on the circle of radius r (a lower bound for the sup;
/// metadata is the grid itself).  Requires 0 <= r < 1.
double sup_mean(const CoeffSeries& f, double r, const CircleGrid& grid);

/// Integral over the disc of `density` against normalized area measure
/// dA = (1/pi) dx dy, i.e. sum_i sum_j w_i * (2 r_i / M) * density(r_i, theta_j).
/// Radius-major, angle-ascending summation order; reproducible bit-for-bit.
double area_integral(const std::function<double(const DiscPoint&)>& density, const RadialGrid& rg,
                     const CircleGrid& cg);

/// int_0^1 x^n (1-x)^m (log 1/(1-x))^alpha dx for integer n >= 1, m >= 1 and
/// alpha >= 0, via the substitution x = 1 - e^{-s} (the integrand becomes
/// (1-e^{-s})^n e^{-(m+1)s} s^alpha, smooth on [0, infinity)) and adaptive
/// Gauss-Kronrod refinement to ~1e-12 relative error.
QuadratureResult beta_log_integral(std::int64_t n, int m, double alpha);

namespace detail {
/// In-place radix-2 FFT, exponent convention e^{+2 pi i jk / M}; size must be
/// a power of two.  Twiddles come from a cached full-resolution table so
/// repeated same-size calls are cheap and bit-identical.
void fft_pow2(std::vector<cplx>& a);
}  // namespace detail

}  // namespace disclab
