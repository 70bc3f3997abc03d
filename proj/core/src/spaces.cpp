#include "disclab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace disclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

double mean_pow(const std::vector<cplx>& vals, double p) {
  double acc = 0.0;
  if (p == 2.0) {
    for (const cplx& v : vals) acc += std::norm(v);
  } else {
    for (const cplx& v : vals) acc += std::pow(std::abs(v), p);
  }
  return acc / static_cast<double>(vals.size());
}

double max_abs(const std::vector<cplx>& vals) {
  double mx = 0.0;
  for (const cplx& v : vals) mx = std::max(mx, std::abs(v));
  return mx;
}

GridMeta meta_of(const RadialGrid& rg, const CircleGrid& cg, int maxlevel = -1) {
  GridMeta m;
  m.circle_points = cg.points();
  m.radial_nodes = static_cast<int>(rg.size());
  m.radial_levels = rg.levels();
  m.max_box_level = maxlevel;
  return m;
}

}  // namespace

SpaceParams SpaceParams::hardy(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("SpaceParams::hardy: need p > 0");
  return {SpaceKind::hardy, p, 0.0};
}
SpaceParams SpaceParams::hinfty() { return {SpaceKind::hardy, kInf, 0.0}; }
SpaceParams SpaceParams::bergman(double p, double alpha) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("SpaceParams::bergman: need 0 < p < inf");
  if (!(alpha > -1.0)) throw std::invalid_argument("SpaceParams::bergman: need alpha > -1");
  return {SpaceKind::bergman, p, alpha};
}
SpaceParams SpaceParams::dirichlet(double p, double alpha) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("SpaceParams::dirichlet: need 0 < p < inf");
  if (!(alpha > -1.0)) throw std::invalid_argument("SpaceParams::dirichlet: need alpha > -1");
  return {SpaceKind::dirichlet_type, p, alpha};
}
SpaceParams SpaceParams::bloch() { return {SpaceKind::bloch, 0.0, 0.0}; }
SpaceParams SpaceParams::log_bloch(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("SpaceParams::log_bloch: need alpha > 0");
  return {SpaceKind::log_bloch, 0.0, alpha};
}
SpaceParams SpaceParams::bmoa() { return {SpaceKind::bmoa, 2.0, 0.0}; }
SpaceParams SpaceParams::bmoa_log() { return {SpaceKind::bmoa_log, 2.0, 0.0}; }

bool SpaceParams::central_dirichlet() const {
  return kind == SpaceKind::dirichlet_type && std::abs(alpha - (p - 1.0)) < 1e-12;
}

std::string SpaceParams::label() const {
  switch (kind) {
    case SpaceKind::hardy:
      return std::isinf(p) ? "hinfty" : "hardy[p=" + num(p) + "]";
    case SpaceKind::bergman:
      return "bergman[p=" + num(p) + ";alpha=" + num(alpha) + "]";
    case SpaceKind::dirichlet_type:
      return "dirichlet[p=" + num(p) + ";alpha=" + num(alpha) + "]";
    case SpaceKind::bloch:
      return "bloch";
    case SpaceKind::log_bloch:
      return "logbloch[alpha=" + num(alpha) + "]";
    case SpaceKind::bmoa:
      return "bmoa";
    case SpaceKind::bmoa_log:
      return "bmoalog";
  }
  return "?";
}

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::bounded:
      return "bounded";
    case Verdict::diverging:
      return "diverging";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict classify_trace(std::span<const RefinementPoint> trace) {
  if (trace.size() < 4) return Verdict::inconclusive;
  const std::size_t n = trace.size();
  const double v0 = trace[n - 4].value;
  const double v3 = trace[n - 1].value;
  if (std::abs(v3) < 1e-300 && std::abs(v0) < 1e-300) return Verdict::bounded;
  if (!(v0 > 0.0)) return Verdict::diverging;
  const double g = v3 / v0;
  if (g < 1.1) return Verdict::bounded;
  const bool monotone = trace[n - 4].value < trace[n - 3].value &&
                        trace[n - 3].value < trace[n - 2].value && trace[n - 2].value < trace[n - 1].value;
  if (g > 1.5 || monotone) return Verdict::diverging;
  return Verdict::inconclusive;
}

NormEstimate refinement_study(const std::function<double(std::int64_t)>& estimate_at,
                              std::span<const std::int64_t> ns) {
  if (ns.empty()) throw std::invalid_argument("refinement_study: need at least one truncation");
  NormEstimate est;
  for (std::int64_t n : ns) est.trace.push_back({n, estimate_at(n)});
  est.value = est.trace.back().value;
  est.truncation_degree = est.trace.back().n;
  est.diverging = classify_trace(est.trace) == Verdict::diverging;
  return est;
}

DyadicBox::DyadicBox(int level_, std::int64_t index_) : level(level_), index(index_) {
  if (level < 0 || level > 50) throw std::invalid_argument("DyadicBox: level out of range");
  if (index < 0 || index >= (std::int64_t{1} << level)) throw std::invalid_argument("DyadicBox: index out of range");
}
double DyadicBox::arc_length() const { return std::ldexp(1.0, -level); }
double DyadicBox::inner_radius() const { return 1.0 - std::ldexp(1.0, -level); }

// ---- norms -----------------------------------------------------------------

NormEstimate hardy_norm(const CoeffSeries& f, double p, const RadialGrid& rg, const CircleGrid& cg) {
  if (!(p > 0.0)) throw std::invalid_argument("hardy_norm: need p > 0");
  NormEstimate est;
  est.truncation_degree = f.degree();
  est.grid = meta_of(rg, cg);
  const bool sup_norm = std::isinf(p);
  double best = 0.0;
  for (double r : rg.nodes()) {
    const auto vals = sample_circle(f, r, cg);
    best = std::max(best, sup_norm ? max_abs(vals) : std::pow(mean_pow(vals, p), 1.0 / p));
  }
  // truncated series are polynomials: the radial sup is attained at the
  // boundary circle, which we can evaluate directly
  const auto boundary = sample_circle(f, 1.0, cg);
  best = std::max(best, sup_norm ? max_abs(boundary) : std::pow(mean_pow(boundary, p), 1.0 / p));
  est.value = best;
  return est;
}

NormEstimate bergman_norm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                          const CircleGrid& cg) {
  if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("bergman_norm: need 0 < p < inf");
  if (!(alpha > -1.0)) throw std::invalid_argument("bergman_norm: need alpha > -1");
  NormEstimate est;
  est.truncation_degree = f.degree();
  est.grid = meta_of(rg, cg);
  const auto nodes = rg.nodes();
  const auto wts = rg.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    const auto vals = sample_circle(f, r, cg);
    acc += wts[i] * 2.0 * r * std::pow(1.0 - r, alpha) * mean_pow(vals, p);
  }
  est.value = std::pow((alpha + 1.0) * acc, 1.0 / p);
  return est;
}

NormEstimate dirichlet_seminorm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                                const CircleGrid& cg) {
  NormEstimate est = bergman_norm(derivative(f), p, alpha, rg, cg);
  est.truncation_degree = f.degree();
  return est;
}

NormEstimate dirichlet_norm(const CoeffSeries& f, double p, double alpha, const RadialGrid& rg,
                            const CircleGrid& cg) {
  NormEstimate est = dirichlet_seminorm(f, p, alpha, rg, cg);
  est.value = std::pow(std::pow(std::abs(f.coeff(0)), p) + std::pow(est.value, p), 1.0 / p);
  return est;
}

namespace {

NormEstimate weighted_derivative_sup(const CoeffSeries& f, const RadialGrid& rg, const CircleGrid& cg,
                                     const std::function<double(double)>& weight) {
  NormEstimate est;
  est.truncation_degree = f.degree();
  est.grid = meta_of(rg, cg);
  const CoeffSeries fp = derivative(f);
  if (fp.empty()) return est;  // constants: seminorm 0
  // r = 0 first: several sups (|a_1|, Mobius at a=0, ...) live there
  double best = weight(0.0) * std::abs(fp.coeff(0));
  for (double r : rg.nodes()) {
    const auto vals = sample_circle(fp, r, cg);
    best = std::max(best, weight(r) * max_abs(vals));
  }
  est.value = best;
  return est;
}

}  // namespace

NormEstimate bloch_seminorm(const CoeffSeries& f, const RadialGrid& rg, const CircleGrid& cg) {
  return weighted_derivative_sup(f, rg, cg, [](double r) { return 1.0 - r * r; });
}

NormEstimate log_bloch_seminorm(const CoeffSeries& f, double alpha, const RadialGrid& rg,
                                const CircleGrid& cg) {
  if (!(alpha > 0.0)) throw std::invalid_argument("log_bloch_seminorm: need alpha > 0");
  return weighted_derivative_sup(f, rg, cg, [alpha](double r) {
    const double om = 1.0 - r * r;
    return om * std::pow(std::log(std::numbers::e / om), alpha);
  });
}

// ---- Carleson boxes --------------------------------------------------------

SampledDensity::SampledDensity(RadialGrid rg, CircleGrid cg, std::vector<double> values)
    : rg_(std::move(rg)), cg_(std::move(cg)), values_(std::move(values)) {
  stride_ = static_cast<std::size_t>(cg_.points());
  if (values_.size() != rg_.size() * stride_) {
    throw std::invalid_argument("SampledDensity: value count must be radial_nodes * circle_points");
  }
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("SampledDensity: densities must be finite and >= 0");
  }
}

SampledDensity SampledDensity::from_function(const std::function<double(const DiscPoint&)>& density,
                                             const RadialGrid& rg, const CircleGrid& cg) {
  std::vector<double> vals;
  vals.reserve(rg.size() * static_cast<std::size_t>(cg.points()));
  for (double r : rg.nodes()) {
    for (int j = 0; j < cg.points(); ++j) vals.push_back(density(DiscPoint(r, cg.angle(j))));
  }
  return SampledDensity(rg, cg, std::move(vals));
}

SampledDensity SampledDensity::derivative_weight(const CoeffSeries& g, double q, const RadialGrid& rg,
                                                 const CircleGrid& cg) {
  if (!(q > 0.0)) throw std::invalid_argument("SampledDensity::derivative_weight: need q > 0");
  const CoeffSeries gp = derivative(g);
  std::vector<double> vals;
  vals.reserve(rg.size() * static_cast<std::size_t>(cg.points()));
  for (double r : rg.nodes()) {
    const double w = std::pow(1.0 - r * r, q - 1.0);
    const auto circle = sample_circle(gp, r, cg);
    for (const cplx& v : circle) vals.push_back(w * std::pow(std::abs(v), q));
  }
  return SampledDensity(rg, cg, std::move(vals));
}

double SampledDensity::disc_integral() const {
  const auto nodes = rg_.nodes();
  const auto wts = rg_.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double ring = 0.0;
    for (std::size_t j = 0; j < stride_; ++j) ring += value(i, j);
    acc += wts[i] * (2.0 * nodes[i] / static_cast<double>(stride_)) * ring;
  }
  return acc;
}

std::function<double(const DiscPoint&)> mu_gq_density(const CoeffSeries& g, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("mu_gq_density: need q > 0");
  const CoeffSeries gp = derivative(g);
  return [gp, q](const DiscPoint& z) {
    const double om = 1.0 - z.r * z.r;
    return std::pow(std::abs(evaluate(gp, z)), q) * std::pow(om, q - 1.0);
  };
}

namespace {

NormEstimate box_sup(const SampledDensity& density, double power, int maxlevel) {
  const RadialGrid& rg = density.radial();
  const CircleGrid& cg = density.circle();
  const int m = cg.points();
  if (maxlevel < 0) throw std::invalid_argument("carleson: need maxlevel >= 0");
  if (maxlevel > rg.levels() - 2) {
    throw std::invalid_argument("carleson: maxlevel must leave two radial levels inside the deepest box");
  }
  if (maxlevel > 30 || m % (1 << maxlevel) != 0) {
    throw std::invalid_argument("carleson: 2^maxlevel must divide the circle grid size");
  }
  NormEstimate est;
  est.grid = meta_of(rg, cg, maxlevel);
  const auto nodes = rg.nodes();
  const auto wts = rg.weights();
  double best = 0.0;
  const double ln2 = std::numbers::ln2;
  for (int level = 0; level <= maxlevel; ++level) {
    const std::int64_t boxes = std::int64_t{1} << level;
    const double inner = 1.0 - std::ldexp(1.0, -level);
    const std::size_t i0 = rg.first_node_at_or_above(inner);
    std::vector<double> mass(static_cast<std::size_t>(boxes), 0.0);
    const std::size_t per_box = static_cast<std::size_t>(m) / static_cast<std::size_t>(boxes);
    for (std::size_t i = i0; i < nodes.size(); ++i) {
      const double row_w = wts[i] * 2.0 * nodes[i] / static_cast<double>(m);
      for (std::size_t b = 0; b < mass.size(); ++b) {
        double s = 0.0;
        for (std::size_t j = b * per_box; j < (b + 1) * per_box; ++j) s += density.value(i, j);
        mass[b] += row_w * s;
      }
    }
    const double len = std::ldexp(1.0, -level);  // normalized arc length
    const double factor = power == 0.0 ? 1.0 : std::pow((level + 1) * ln2, power);
    for (double b : mass) best = std::max(best, factor * b / len);
  }
  est.value = best;
  return est;
}

}  // namespace

NormEstimate carleson_constant(const SampledDensity& density, int maxlevel) {
  return box_sup(density, 0.0, maxlevel);
}

NormEstimate carleson_constant(const std::function<double(const DiscPoint&)>& density, int maxlevel,
                               const RadialGrid& rg, const CircleGrid& cg) {
  return box_sup(SampledDensity::from_function(density, rg, cg), 0.0, maxlevel);
}

NormEstimate log_carleson_constant(const SampledDensity& density, double power, int maxlevel) {
  if (!(power >= 0.0)) throw std::invalid_argument("log_carleson_constant: need power >= 0");
  return box_sup(density, power, maxlevel);
}

NormEstimate log_carleson_constant(const std::function<double(const DiscPoint&)>& density, double power,
                                   int maxlevel, const RadialGrid& rg, const CircleGrid& cg) {
  if (!(power >= 0.0)) throw std::invalid_argument("log_carleson_constant: need power >= 0");
  return box_sup(SampledDensity::from_function(density, rg, cg), power, maxlevel);
}

// ---- diagnostics -----------------------------------------------------------

GrowthReport growth_bound_check(const CoeffSeries& f, double q, const RadialGrid& rg,
                                const CircleGrid& cg) {
  if (!(q > 0.0) || std::isinf(q)) throw std::invalid_argument("growth_bound_check: need 0 < q < inf");
  GrowthReport rep;
  const NormEstimate semi = bloch_seminorm(f, rg, cg);
  rep.bloch_norm = std::abs(f.coeff(0)) + semi.value;
  if (semi.value == 0.0) {
    rep.trivial_pass = true;
    return rep;
  }
  for (double r : rg.nodes()) {
    if (r < 0.5) continue;
    const double ratio =
        integral_mean(f, q, r, cg) / (rep.bloch_norm * std::sqrt(std::log(1.0 / (1.0 - r))));
    rep.samples.emplace_back(r, ratio);
    rep.sup_ratio = std::max(rep.sup_ratio, ratio);
  }
  return rep;
}

double lacunary_characteristic(const LacunarySpec& s, const SpaceParams& space) {
  const auto& n = s.indices();
  const auto& a = s.coeffs();
  const double ln2 = std::numbers::ln2;
  switch (space.kind) {
    case SpaceKind::dirichlet_type: {
      double acc = 0.0;
      for (std::size_t k = 0; k < n.size(); ++k) {
        acc += std::pow(static_cast<double>(n[k]), space.p - space.alpha - 1.0) * std::pow(std::abs(a[k]), space.p);
      }
      return acc;
    }
    case SpaceKind::bergman: {
      double acc = 0.0;
      for (std::size_t k = 0; k < n.size(); ++k) {
        acc += std::pow(static_cast<double>(n[k]), -space.alpha - 1.0) * std::pow(std::abs(a[k]), space.p);
      }
      return acc;
    }
    case SpaceKind::hardy: {
      double acc = 0.0;
      if (std::isinf(space.p)) {
        for (const cplx& c : a) acc += std::abs(c);
      } else {
        for (const cplx& c : a) acc += std::norm(c);
      }
      return acc;
    }
    case SpaceKind::bloch: {
      double mx = 0.0;
      for (const cplx& c : a) mx = std::max(mx, std::abs(c));
      return mx;
    }
    case SpaceKind::log_bloch: {
      double mx = 0.0;
      for (std::size_t k = 0; k < n.size(); ++k) {
        mx = std::max(mx, std::abs(a[k]) * std::pow(std::log(static_cast<double>(n[k])), space.alpha));
      }
      return mx;
    }
    case SpaceKind::bmoa: {
      double acc = 0.0;
      for (const cplx& c : a) acc += std::norm(c);
      return acc;
    }
    case SpaceKind::bmoa_log: {
      // dyadic tail statistic matching the two-log box condition
      std::vector<double> suffix(n.size() + 1, 0.0);
      for (std::size_t k = n.size(); k-- > 0;) suffix[k] = suffix[k + 1] + std::norm(a[k]);
      double mx = 0.0;
      const int lmax = static_cast<int>(std::ceil(std::log2(static_cast<double>(n.back())))) + 1;
      for (int level = 0; level <= lmax; ++level) {
        const std::int64_t cutoff = std::int64_t{1} << std::min(level, 62);
        const std::size_t k0 = static_cast<std::size_t>(
            std::upper_bound(n.begin(), n.end(), cutoff) - n.begin());
        mx = std::max(mx, std::pow((level + 1) * ln2, 2.0) * suffix[k0]);
      }
      return mx;
    }
  }
  throw std::logic_error("lacunary_characteristic: unhandled space kind");
}

NormEstimate norm_estimate(const CoeffSeries& f, const SpaceParams& space, const RadialGrid& rg,
                           const CircleGrid& cg, int maxlevel) {
  switch (space.kind) {
    case SpaceKind::hardy:
      return hardy_norm(f, space.p, rg, cg);
    case SpaceKind::bergman:
      return bergman_norm(f, space.p, space.alpha, rg, cg);
    case SpaceKind::dirichlet_type:
      return dirichlet_norm(f, space.p, space.alpha, rg, cg);
    case SpaceKind::bloch:
      return bloch_seminorm(f, rg, cg);
    case SpaceKind::log_bloch:
      return log_bloch_seminorm(f, space.alpha, rg, cg);
    case SpaceKind::bmoa:
    case SpaceKind::bmoa_log: {
      int lvl = maxlevel;
      if (lvl < 0) {
        // auto: keep at least 4 angles per box and 2 radial levels in the deepest box
        int lg = 0;
        while ((1 << (lg + 1)) <= cg.points()) ++lg;
        lvl = std::max(0, std::min({rg.levels() - 2, lg - 2, 12}));
      }
      const SampledDensity mu = SampledDensity::derivative_weight(f, 2.0, rg, cg);
      return space.kind == SpaceKind::bmoa ? carleson_constant(mu, lvl)
                                           : log_carleson_constant(mu, 2.0, lvl);
    }
  }
  throw std::logic_error("norm_estimate: unhandled space kind");
}

}  // namespace disclab
