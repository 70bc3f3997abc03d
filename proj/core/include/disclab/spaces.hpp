#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "disclab/grids.hpp"
#include "disclab/quadrature.hpp"
#include "disclab/series.hpp"

namespace disclab {

enum class SpaceKind { hardy, bergman, dirichlet_type, bloch, log_bloch, bmoa, bmoa_log };

/// Which space a norm estimate refers to.  p may be +infinity for the sup
/// flavor of the Hardy scale; alpha is the weight exponent where one exists
/// (Bergman / Dirichlet-type) or the log exponent (log-Bloch).
struct SpaceParams {
  SpaceKind kind = SpaceKind::hardy;
  double p = 2.0;
  double alpha = 0.0;

  static SpaceParams hardy(double p);
  static SpaceParams hinfty();
  static SpaceParams bergman(double p, double alpha);
  static SpaceParams dirichlet(double p, double alpha);
  static SpaceParams bloch();
  static SpaceParams log_bloch(double alpha);
  static SpaceParams bmoa();
  static SpaceParams bmoa_log();

  /// True for the weight alpha = p-1 that sits on the Hardy row (p=2 is H^2).
  bool central_dirichlet() const;
  std::string label() const;
};

struct GridMeta {
  int circle_points = 0;
  int radial_nodes = 0;
  int radial_levels = 0;
  int max_box_level = -1;
};

struct RefinementPoint {
  std::int64_t n = 0;  // truncation degree (or gap-term count for coefficient traces)
  double value = 0.0;
};

enum class Verdict { bounded, diverging, inconclusive };
std::string verdict_label(Verdict v);

/// Norm value at one truncation, plus the refinement trail when the value
/// came out of a refinement study.  `diverging` set implies `trace` shows the
/// growth that triggered it.
struct NormEstimate {
  double value = 0.0;
  std::int64_t truncation_degree = -1;
  GridMeta grid;
  bool diverging = false;
  std::vector<RefinementPoint> trace;
};

/// One rule for every refinement trace in the artifact (no per-experiment
/// thresholds).  With g = v[last]/v[last-3] over the last three doublings:
///   bounded       g < 1.1
///   diverging     g > 1.5, or g >= 1.1 with the last four values strictly
///                 increasing (slow log-type growth never reaches 1.5 at
///                 desk scale, but it keeps climbing; a stabilized estimate
///                 does not)
///   inconclusive  anything else, or fewer than four points
Verdict classify_trace(std::span<const RefinementPoint> trace);

/// Run `estimate_at` over the given truncations and classify the result.
NormEstimate refinement_study(const std::function<double(std::int64_t)>& estimate_at,
                              std::span<const std::int64_t> ns);

/// Dyadic Carleson box: level l >= 0, index 0 <= j < 2^l.  The box is
/// S(I) = { r e^{it} : e^{it} in I, 1 - |I|_norm <= r < 1 } where I is the
/// arc [2 pi j 2^-l, 2 pi (j+1) 2^-l) and |I|_norm = 2^-l is the normalized
/// arc length |I|/2pi.  All box ratios and log factors below use |I|_norm,
/// which keeps log(2/|I|_norm) = (l+1) log 2 positive at every level.
struct DyadicBox {
  int level = 0;
  std::int64_t index = 0;

  DyadicBox(int level_, std::int64_t index_);
  double arc_length() const;    // normalized: 2^-level
  double inner_radius() const;  // 1 - 2^-level
};

// ---- norms -----------------------------------------------------------------

/// sup_r M_p(r, f), maximized over the radial nodes and over the boundary
/// circle itself (legitimate for truncated series: they are polynomials, and
/// Hardy convexity makes the boundary value the sup).  p may be +infinity.
NormEstimate hardy_norm(const CoeffSeries& f, double p, const RadialGrid& rg, const CircleGrid& cg);

/// ((alpha+1) * integral_D (1-|z|)^alpha |f|^p dA)^{1/p}, alpha > -1.
NormEstimate bergman_norm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                          const CircleGrid& cg);

/// Seminorm part of the Dirichlet-type norm: the Bergman norm of f'.
NormEstimate dirichlet_seminorm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                                const CircleGrid& cg);

/// (|f(0)|^p + dirichlet_seminorm^p)^{1/p}.
NormEstimate dirichlet_norm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                            const CircleGrid& cg);

/// sup over {0} and the grid of (1-r^2) |f'(r e^{i theta})|.
NormEstimate bloch_seminorm(const CoeffSeries& f, const RadialGrid& rg, const CircleGrid& cg);

/// sup over {0} and the grid of (1-r^2) |f'| (log(e/(1-r^2)))^alpha, alpha > 0.
NormEstimate log_bloch_seminorm(const CoeffSeries& f, double alpha, const RadialGrid& rg,
                                const CircleGrid& cg);

// ---- Carleson boxes --------------------------------------------------------

/// A nonnegative density sampled on a polar grid, radius-major.  This is the
/// fast path for densities derived from series: the circle values of f' are
/// computed once per radius instead of per point.
class SampledDensity {
 public:
  SampledDensity(RadialGrid rg, CircleGrid cg, std::vector<double> values);
  static SampledDensity from_function(const std::function<double(const DiscPoint&)>& density,
                                      const RadialGrid& rg, const CircleGrid& cg);
  /// |g'(z)|^q (1-|z|^2)^{q-1} on the grid (q=2 is the area density whose
  /// Carleson character detects membership on the BMOA row).
  static SampledDensity derivative_weight(const CoeffSeries& g, double q, const RadialGrid& rg,
                                          const CircleGrid& cg);

  const RadialGrid& radial() const { return rg_; }
  const CircleGrid& circle() const { return cg_; }
  double value(std::size_t i, std::size_t j) const { return values_[i * stride_ + j]; }
  /// Whole-disc integral against normalized area measure.
  double disc_integral() const;

 private:
  RadialGrid rg_;
  CircleGrid cg_;
  std::vector<double> values_;
  std::size_t stride_ = 0;
};

/// Pointwise closure form of the derivative weight (slow path, generic use).
std::function<double(const DiscPoint&)> mu_gq_density(const CoeffSeries& g, double q);

/// sup over dyadic boxes up to `maxlevel` of mu(S(I)) / |I|_norm, where mu is
/// the density integrated over the box against normalized area measure.
/// Requires a power-of-two circle grid with 2^maxlevel dividing M.
NormEstimate carleson_constant(const SampledDensity& density, int maxlevel);
NormEstimate carleson_constant(const std::function<double(const DiscPoint&)>& density, int maxlevel,
                               const RadialGrid& rg, const CircleGrid& cg);

/// Same sup with the factor (log(2/|I|_norm))^power; power = 0 reproduces
/// carleson_constant exactly.
NormEstimate log_carleson_constant(const SampledDensity& density, double power, int maxlevel);
NormEstimate log_carleson_constant(const std::function<double(const DiscPoint&)>& density, double power,
                                   int maxlevel, const RadialGrid& rg, const CircleGrid& cg);

// ---- diagnostics -----------------------------------------------------------

/// Checks M_q(r, f) <= C ||f||_B (log 1/(1-r))^{1/2} on radial nodes r >= 1/2
/// (the bound is a near-boundary growth statement; tiny r makes the right
/// side vanish for trivial reasons).  ||f||_B = |f(0)| + Bloch seminorm.
struct GrowthReport {
  double sup_ratio = 0.0;
  double bloch_norm = 0.0;
  bool trivial_pass = false;  // constant f: nothing to check
  std::vector<std::pair<double, double>> samples;  // (r, ratio)
};
GrowthReport growth_bound_check(const CoeffSeries& f, double q, const RadialGrid& rg,
                                const CircleGrid& cg);

/// Finite membership statistic for a gap series: the partial characterizing
/// sum (or sup) whose boundedness over growing prefixes decides membership.
///   Dirichlet-type(p,alpha): sum n_k^{p-alpha-1} |a_k|^p
///   Hardy p<inf:  sum |a_k|^2      Hardy p=inf: sum |a_k|
///   Bergman(p,alpha): sum n_k^{-alpha-1} |a_k|^p
///   Bloch: sup |a_k|               log-Bloch(alpha): sup |a_k| (log n_k)^alpha
///   BMOA: sum |a_k|^2
///   BMOA-log: sup_l ((l+1) log 2)^2 * sum_{n_k > 2^l} |a_k|^2   (dyadic tail)
double lacunary_characteristic(const LacunarySpec& s, const SpaceParams& space);

/// Dispatcher: estimate the norm/seminorm of f in the given space with the
/// given grids (box spaces additionally take maxlevel).
NormEstimate norm_estimate(const CoeffSeries& f, const SpaceParams& space, const RadialGrid& rg,
                           const CircleGrid& cg, int maxlevel = -1);

}  // namespace disclab
