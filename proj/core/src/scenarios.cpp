#include "disclab/scenarios.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "disclab/fournier.hpp"
#include "disclab/quadrature.hpp"
#include "disclab/random_series.hpp"
#include "disclab/spaces.hpp"

namespace disclab {

namespace {

constexpr double kLn2 = 0.6931471805599453;

std::string fmt(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

double sq(double x) { return x * x; }

// pass/fail bookkeeping shared by every scenario body.  A failed check makes
// the run fail; an expected-verdict mismatch that lands on "inconclusive"
// only downgrades the run (the dial was too short, not wrong).
struct Checker {
  RunRecord* rec;
  bool failed = false;
  bool undecided = false;

  explicit Checker(RunRecord& r) : rec(&r) {}

  void check(bool ok, const std::string& what) {
    rec->notes.push_back((ok ? "ok: " : "FAIL: ") + what);
    if (!ok) failed = true;
  }

  Verdict expect(Verdict got, Verdict want, const std::string& what) {
    if (got == want) {
      rec->notes.push_back("ok: " + what + " [" + verdict_label(got) + "]");
    } else if (got == Verdict::inconclusive) {
      rec->notes.push_back("INCONCLUSIVE: " + what + " [want " + verdict_label(want) + "]");
      undecided = true;
    } else {
      rec->notes.push_back("FAIL: " + what + " [got " + verdict_label(got) + ", want " +
                           verdict_label(want) + "]");
      failed = true;
    }
    return got;
  }

  void note(const std::string& s) { rec->notes.push_back("note: " + s); }

  void mark_inconclusive(const std::string& why) {
    rec->notes.push_back("inconclusive by design: " + why);
    undecided = true;
  }

  void finish() {
    rec->verdict = failed ? RunVerdict::fail
                          : (undecided ? RunVerdict::inconclusive : RunVerdict::pass);
  }
};

void add_row(RunRecord& rec, const std::string& quantity, const std::string& space, std::int64_t n,
             double value) {
  rec.rows.push_back({quantity, space, n, value});
}

Verdict push_trace(RunRecord& rec, const std::string& quantity, const std::string& space,
                   const std::vector<RefinementPoint>& pts) {
  for (const auto& p : pts) rec.rows.push_back({quantity, space, p.n, p.value});
  return classify_trace(pts);
}

int pow2_at_least(std::int64_t n) {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

struct GridPair {
  RadialGrid radial;
  CircleGrid circle;
};

// radial depth tracks the truncation degree (levels ~ log2 deg + extra) and
// the circle is oversampled past 2*deg so p=2 angle means are exact.  scale
// only refines the circle; verdict windows are calibrated at scale 0 and must
// not move with it.
GridPair grids_for(std::int64_t degree, const RunConfig& cfg, int extra_levels = 4, int cells = 4) {
  int lg = 0;
  while ((std::int64_t{1} << lg) < std::max<std::int64_t>(degree, 1)) ++lg;
  const int levels = std::clamp(lg + extra_levels, 8, 20);
  const int over = 1 << std::clamp(cfg.scale, 0, 3);
  const int points = pow2_at_least(std::max<std::int64_t>(2 * degree + 1, 256)) * over;
  return GridPair{RadialGrid::geometric_midpoint(levels, cells), CircleGrid(points)};
}

int auto_box_level(const RadialGrid& rg, const CircleGrid& cg) {
  int lg = 0;
  while ((1 << (lg + 1)) <= cg.points()) ++lg;
  return std::max(0, std::min({rg.levels() - 2, lg - 2, 12}));
}

CoeffSeries random_poly(std::int64_t degree, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) {
    const double re = uni(gen);
    const double im = uni(gen);
    v = cplx(re, im);
  }
  return CoeffSeries(std::move(c));
}

// gap-series membership statistic computed straight from (n_k, a_k) held as
// doubles.  Same formulas as lacunary_characteristic, but usable for dial
// values whose frequencies overflow 64-bit indices (2^k past k = 62).
double gap_char_direct(const SpaceParams& sp, std::int64_t kmax,
                       const std::function<double(std::int64_t)>& nk,
                       const std::function<double(std::int64_t)>& ak) {
  switch (sp.kind) {
    case SpaceKind::dirichlet_type: {
      const double e = sp.p - sp.alpha - 1.0;
      double s = 0.0;
      for (std::int64_t k = 1; k <= kmax; ++k) s += std::pow(nk(k), e) * std::pow(ak(k), sp.p);
      return s;
    }
    case SpaceKind::hardy: {
      double s = 0.0;
      if (std::isinf(sp.p)) {
        for (std::int64_t k = 1; k <= kmax; ++k) s += ak(k);
      } else {
        for (std::int64_t k = 1; k <= kmax; ++k) s += sq(ak(k));
      }
      return s;
    }
    case SpaceKind::bloch: {
      double m = 0.0;
      for (std::int64_t k = 1; k <= kmax; ++k) m = std::max(m, ak(k));
      return m;
    }
    case SpaceKind::log_bloch: {
      double m = 0.0;
      for (std::int64_t k = 1; k <= kmax; ++k)
        m = std::max(m, ak(k) * std::pow(std::log(nk(k)), sp.alpha));
      return m;
    }
    default:
      throw std::invalid_argument("gap_char_direct: unsupported space kind");
  }
}

LacunarySpec dyadic_gap(std::int64_t kmax, const std::function<double(std::int64_t)>& ak) {
  std::vector<std::int64_t> idx;
  std::vector<cplx> cf;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    idx.push_back(std::int64_t{1} << k);
    cf.push_back(ak(k));
  }
  return LacunarySpec(std::move(idx), std::move(cf), 2.0);
}

LacunarySpec flip_signs(const LacunarySpec& s, const SignSequence& signs) {
  if (signs.signs.size() < s.terms()) throw std::invalid_argument("flip_signs: not enough signs");
  std::vector<cplx> cf = s.coeffs();
  for (std::size_t k = 0; k < cf.size(); ++k) cf[k] *= static_cast<double>(signs.signs[k]);
  return LacunarySpec(s.indices(), std::move(cf), s.ratio());
}

double grid_sup(const SparseLaurent& f, const CircleGrid& cg) {
  double m = 0.0;
  for (const cplx& v : f.evaluate_on_grid(cg)) m = std::max(m, std::abs(v));
  return m;
}

double grid_min(const SparseLaurent& f, const CircleGrid& cg) {
  double m = 1e300;
  for (const cplx& v : f.evaluate_on_grid(cg)) m = std::min(m, std::abs(v));
  return m;
}

// ---------------------------------------------------------------------------
// scenario bodies
// ---------------------------------------------------------------------------

// p=2, alpha=1 derivative seminorm: quadrature against the exact coefficient
// form sum 2n/(2n+1) |a_n|^2, and the structural envelope [2/3, 1] relative
// to the tail Hardy-2 energy.
RunRecord scn_d21_equals_h2(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const RadialGrid rg = RadialGrid::geometric_gauss(22, 6);
  const CircleGrid cg(512);
  const std::string dsp = SpaceParams::dirichlet(2.0, 1.0).label();

  auto closed_form = [](const CoeffSeries& f) {
    double s = 0.0;
    auto c = f.coeffs();
    for (std::size_t m = 1; m < c.size(); ++m) {
      const double mm = static_cast<double>(m);
      s += 2.0 * mm / (2.0 * mm + 1.0) * std::norm(c[m]);
    }
    return s;
  };

  // truncation dial on one fixed draw
  const CoeffSeries base = random_poly(128, cfg.seed + 100);
  double worst_gap = 0.0;
  for (std::int64_t n : {16, 32, 64, 128}) {
    const CoeffSeries fn = block_partial_sum(base, 0, n + 1);
    const double quad2 = sq(dirichlet_seminorm(fn, 2.0, 1.0, rg, cg).value);
    const double cf2 = closed_form(fn);
    const double gap = std::abs(quad2 - cf2) / cf2;
    worst_gap = std::max(worst_gap, gap);
    add_row(rec, "seminorm-sq-quadrature", dsp, n, quad2);
    add_row(rec, "seminorm-sq-closed-form", dsp, n, cf2);
    add_row(rec, "relative-gap", dsp, n, gap);
  }
  ck.check(worst_gap <= 1e-7, "quadrature matches closed form over the truncation dial, worst rel gap " +
                                  fmt(worst_gap));

  // fresh draws at the top degree; ratio to the tail Hardy-2 energy
  double lo = 1e300, hi = 0.0;
  double worst_draw = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CoeffSeries f = random_poly(128, cfg.seed + 200 + i);
    const double quad2 = sq(dirichlet_seminorm(f, 2.0, 1.0, rg, cg).value);
    const double cf2 = closed_form(f);
    worst_draw = std::max(worst_draw, std::abs(quad2 - cf2) / cf2);
    const double h2sq = sq(hardy_norm(f, 2.0, rg, cg).value) - std::norm(f.coeff(0));
    const double ratio = quad2 / h2sq;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    add_row(rec, "tail-energy-ratio", "hardy[p=2]", i, ratio);
  }
  ck.check(worst_draw <= 1e-7, "closed form holds on 10 fresh draws, worst rel gap " + fmt(worst_draw));
  ck.check(lo >= 2.0 / 3.0 - 1e-9 && hi <= 1.0 + 1e-9,
           "seminorm-sq / tail-energy ratio inside the structural envelope [2/3, 1]: [" + fmt(lo) +
               ", " + fmt(hi) + "]");
  ck.check(lo >= 0.5 && hi <= 2.0, "ratio inside the coarse two-sided envelope [1/2, 2]");
  ck.finish();
  return rec;
}

// multiplication by 1 fixes every implemented estimate; multiplication by a
// constant c rescales 1-homogeneous estimates by |c| and the quadratic box
// constants by |c|^2.
RunRecord scn_identity_multiplier(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const auto [rg, cg] = grids_for(256, cfg, 4, 4);

  const CoeffSeries one(std::vector<cplx>{1.0});
  const cplx cval(0.7, 0.1);
  const CoeffSeries cgain(std::vector<cplx>{cval});

  struct SpaceCase {
    SpaceParams sp;
    double hom;  // |c| exponent under constant scaling
  };
  const std::vector<SpaceCase> spaces = {
      {SpaceParams::hardy(2.0), 1.0},       {SpaceParams::hinfty(), 1.0},
      {SpaceParams::bergman(2.0, 0.5), 1.0}, {SpaceParams::dirichlet(2.0, 1.0), 1.0},
      {SpaceParams::bloch(), 1.0},          {SpaceParams::log_bloch(1.0), 1.0},
      {SpaceParams::bmoa(), 2.0},
  };

  std::vector<std::pair<std::string, CoeffSeries>> fams;
  fams.emplace_back("one", one);
  fams.emplace_back("z", CoeffSeries(std::vector<cplx>{0.0, 1.0}));
  fams.emplace_back("random-poly", random_poly(64, cfg.seed + 7));
  fams.emplace_back("mobius", mobius_series(0.5, 256));
  fams.emplace_back("log-kernel", log_kernel_series(0.0, 256));
  fams.emplace_back("gap-quadratic",
                    lacunary_to_dense(dyadic_gap(8, [](std::int64_t k) { return 1.0 / double(k * k); }), 256));

  double worst_id = 0.0, worst_sc = 0.0;
  std::int64_t fi = 0;
  for (const auto& [fname, f] : fams) {
    const CoeffSeries f_one = cauchy_product(one, f);
    const CoeffSeries f_c = cauchy_product(cgain, f);
    for (const auto& scse : spaces) {
      const double n0 = norm_estimate(f, scse.sp, rg, cg).value;
      const double n1 = norm_estimate(f_one, scse.sp, rg, cg).value;
      const double nc = norm_estimate(f_c, scse.sp, rg, cg).value;
      const double scale = std::pow(std::abs(cval), scse.hom);
      const double id_gap = std::abs(n1 - n0) / std::max(1.0, n0);
      const double sc_gap = std::abs(nc - scale * n0) / std::max(1.0, n0);
      worst_id = std::max(worst_id, id_gap);
      worst_sc = std::max(worst_sc, sc_gap);
      add_row(rec, fname + "/base", scse.sp.label(), fi, n0);
      add_row(rec, fname + "/times-one-gap", scse.sp.label(), fi, id_gap);
      add_row(rec, fname + "/times-c-gap", scse.sp.label(), fi, sc_gap);
    }
    ++fi;
  }
  ck.check(worst_id <= 1e-10, "multiplying by 1 moves no estimate, worst rel gap " + fmt(worst_id));
  ck.check(worst_sc <= 1e-10,
           "constant scaling law |c|^hom holds everywhere, worst rel gap " + fmt(worst_sc));

  // truncation dial: the same identity at four degrees of one function
  std::vector<RefinementPoint> bl;
  for (std::int64_t n : {32, 64, 128, 256}) {
    const CoeffSeries f = mobius_series(0.5, n);
    const double gap = std::abs(norm_estimate(cauchy_product(one, f), SpaceParams::bloch(), rg, cg).value -
                                norm_estimate(f, SpaceParams::bloch(), rg, cg).value);
    ck.check(gap <= 1e-12, "identity exact at degree " + std::to_string(n));
    bl.push_back({n, norm_estimate(f, SpaceParams::bloch(), rg, cg).value});
  }
  ck.expect(push_trace(rec, "mobius/bloch", "bloch", bl), Verdict::bounded,
            "Bloch estimate of the disc automorphism stabilizes under truncation");
  ck.finish();
  return rec;
}

// sign-averaged p-th moments of random sums against the coefficient 2-norm:
// exact at p=2, the exact K-point law at p=4, slow climb toward sqrt(2/pi)
// at p=1, Monte Carlo consistent with exhaustive enumeration.
RunRecord scn_khinchine_bracket(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);

  // p=2 is an identity, not an inequality
  double worst = 0.0;
  std::mt19937_64 gen(cfg.seed + 17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_int_distribution<int> len(3, 16);
  for (int i = 0; i < 10; ++i) {
    std::vector<cplx> c(len(gen));
    for (auto& v : c) v = cplx(uni(gen), uni(gen));
    const auto rep = khinchine_ratio(c, 2.0);
    worst = std::max(worst, std::abs(rep.ratio - 1.0));
  }
  ck.check(worst <= 1e-12, "p=2 moment ratio is exactly 1 on 10 random draws, worst gap " + fmt(worst));

  // equal weights: E S^4 = 3K^2 - 2K, so the ratio is 3 - 2/K exactly
  std::vector<RefinementPoint> p4;
  double worst4 = 0.0;
  for (std::int64_t k : {2, 4, 8, 16}) {
    const std::vector<cplx> c(static_cast<std::size_t>(k), cplx{1.0, 0.0});
    const double r = khinchine_ratio(c, 4.0).ratio;
    worst4 = std::max(worst4, std::abs(r - (3.0 - 2.0 / double(k))));
    p4.push_back({k, r});
  }
  ck.check(worst4 <= 1e-10, "p=4 equal-weight law 3 - 2/K exact over K in {2,4,8,16}, worst gap " + fmt(worst4));
  push_trace(rec, "moment-ratio[p=4]", "sequence", p4);

  // p in {1,4} at K in {12,16,20} by full enumeration, then a 1/K-linear
  // extrapolation to K=64 checked against the known limits
  std::array<double, 3> r1{}, r4{};
  const std::array<std::int64_t, 3> ks{12, 16, 20};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::vector<cplx> c(static_cast<std::size_t>(ks[i]), cplx{1.0, 0.0});
    r1[i] = khinchine_ratio(c, 1.0).ratio;
    r4[i] = khinchine_ratio(c, 4.0).ratio;
    add_row(rec, "moment-ratio[p=1]", "sequence", ks[i], r1[i]);
    add_row(rec, "moment-ratio[p=4]", "sequence", ks[i], r4[i]);
  }
  ck.check(r1[0] < r1[1] && r1[1] < r1[2], "p=1 ratio increases with K toward its limit");
  auto extrap = [&](const std::array<double, 3>& r) {
    const double x1 = 1.0 / double(ks[1]), x2 = 1.0 / double(ks[2]);
    const double slope = (r[2] - r[1]) / (x2 - x1);
    return r[2] + (1.0 / 64.0 - x2) * slope;
  };
  const double e4 = extrap(r4);
  ck.check(std::abs(e4 - (3.0 - 2.0 / 64.0)) <= 1e-9,
           "p=4 extrapolation to K=64 reproduces 3 - 2/64 exactly, got " + fmt(e4));
  const double e1 = extrap(r1);
  const double limit1 = std::sqrt(2.0 / std::numbers::pi);
  ck.check(std::abs(e1 - limit1) <= 0.01,
           "p=1 extrapolation to K=64 lands within 0.01 of sqrt(2/pi), got " + fmt(e1));
  add_row(rec, "moment-ratio-extrapolated[p=1]", "sequence", 64, e1);
  add_row(rec, "moment-ratio-extrapolated[p=4]", "sequence", 64, e4);

  // Holder ordering in p at fixed coefficients
  {
    const std::vector<cplx> c(16, cplx{1.0, 0.0});
    const double a = khinchine_ratio(c, 1.0).ratio;
    const double b = khinchine_ratio(c, 4.0).ratio;
    ck.check(a < 1.0 && 1.0 < b, "moment ratios order as p does: " + fmt(a) + " < 1 < " + fmt(b));
  }

  // Monte Carlo far past the exhaustive cutoff
  {
    const std::vector<cplx> c(64, cplx{1.0, 0.0});
    const auto rep = khinchine_ratio(c, 1.0, 10000, cfg.seed + 23);
    ck.check(rep.method == KhinchineReport::Method::monte_carlo, "K=64 takes the sampling path");
    ck.check(std::abs(rep.ratio - limit1) <= 0.08,
             "sampled p=1 ratio at K=64 within 10% of the limit, got " + fmt(rep.ratio));
    add_row(rec, "moment-ratio-sampled[p=1]", "sequence", 64, rep.ratio);
  }
  ck.finish();
  return rec;
}

// int_0^1 r^n (1-r)^m log^alpha asymptotics: the ratio against
// (log n)^alpha / n^{m+1} settles near m! with sub-5% drift per doubling.
RunRecord scn_beta_log_asymptotic(const RunConfig&) {
  RunRecord rec;
  Checker ck(rec);
  const std::array<std::pair<int, double>, 3> cases{{{1, 2.0}, {1, 3.0}, {3, 2.0}}};
  for (const auto& [m, alpha] : cases) {
    const std::string tag = "normalized-weighted-moment[m=" + std::to_string(m) + ";alpha=" + fmt(alpha) + "]";
    std::vector<double> ratios;
    for (int e = 13; e <= 16; ++e) {
      const std::int64_t n = std::int64_t{1} << e;
      const auto res = beta_log_integral(n, m, alpha);
      ck.check(res.converged, tag + " quadrature converged at n=2^" + std::to_string(e));
      const double ratio = res.value * std::pow(double(n), m + 1) / std::pow(std::log(double(n)), alpha);
      ratios.push_back(ratio);
      add_row(rec, tag, "integral", n, ratio);
    }
    const double drift = std::abs(ratios.back() / ratios[ratios.size() - 2] - 1.0);
    ck.check(drift < 0.05, tag + " ratio drift over the last doubling " + fmt(drift) + " < 5%");
    const double mf = std::tgamma(double(m) + 1.0);
    ck.check(ratios.back() >= 0.5 * mf && ratios.back() <= 2.0 * mf,
             tag + " ratio within a factor 2 of m! = " + fmt(mf) + ", got " + fmt(ratios.back()));
  }
  ck.finish();
  return rec;
}

// gap series sum k^{-2} z^{2^k}: bounded on the disc, yet the p=0.5,
// alpha=-0.5 membership sum grows like the harmonic series.
RunRecord scn_hinfty_not_dq(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  auto nk = [](std::int64_t k) { return std::exp2(double(k)); };
  auto ak = [](std::int64_t k) { return 1.0 / double(k * k); };
  const SpaceParams sup_sp = SpaceParams::hinfty();
  const SpaceParams dq = SpaceParams::dirichlet(0.5, -0.5);
  const SpaceParams blog2 = SpaceParams::log_bloch(2.0);
  const std::vector<std::int64_t> dial = {16, 32, 64, 128};

  auto trace_of = [&](const SpaceParams& sp) {
    std::vector<RefinementPoint> pts;
    for (std::int64_t K : dial) pts.push_back({K, gap_char_direct(sp, K, nk, ak)});
    return pts;
  };

  ck.expect(push_trace(rec, "membership-sum", sup_sp.label(), trace_of(sup_sp)), Verdict::bounded,
            "absolute coefficient sum stays bounded");
  ck.expect(push_trace(rec, "membership-sum", dq.label(), trace_of(dq)), Verdict::diverging,
            "p=0.5 membership sum diverges (harmonic growth)");
  const auto bl = trace_of(blog2);
  ck.expect(push_trace(rec, "membership-sup", blog2.label(), bl), Verdict::bounded,
            "double-log derivative sup stays bounded");
  ck.check(std::abs(bl.back().value - sq(kLn2)) <= 1e-12,
           "double-log sup equals (log 2)^2 exactly, got " + fmt(bl.back().value));

  // library cross-check at a frequency range 64-bit indices can hold
  {
    const LacunarySpec spec = dyadic_gap(10, ak);
    for (const SpaceParams& sp : {sup_sp, dq, blog2}) {
      const double lib = lacunary_characteristic(spec, sp);
      const double direct = gap_char_direct(sp, 10, nk, ak);
      ck.check(std::abs(lib - direct) <= 1e-12 * std::max(1.0, direct),
               "indexed and direct statistics agree at K=10 for " + sp.label());
    }
  }

  // quadrature corroboration on dense truncations
  const LacunarySpec spec10 = dyadic_gap(10, ak);
  for (std::int64_t K = 7; K <= 10; ++K) {
    const std::int64_t deg = std::int64_t{1} << K;
    const CoeffSeries f = lacunary_to_dense(spec10.prefix(static_cast<std::size_t>(K)), deg);
    const auto [rg, cg] = grids_for(deg, cfg);
    const double integral = std::pow(dirichlet_seminorm(f, 0.5, -0.5, rg, cg).value, 0.5);
    const double ch = gap_char_direct(dq, K, nk, ak);
    add_row(rec, "seminorm-integral-quadrature", dq.label(), K, integral);
    ck.check(integral >= ch / 8.0 && integral <= ch * 8.0,
             "quadrature integral tracks the membership sum at K=" + std::to_string(K) +
                 " (ratio " + fmt(integral / ch) + ")");
    const double sup = norm_estimate(f, sup_sp, rg, cg).value;
    const double coef_sum = gap_char_direct(sup_sp, K, nk, ak);
    add_row(rec, "circle-sup", sup_sp.label(), K, sup);
    ck.check(std::abs(sup - coef_sum) <= 1e-9 * coef_sum,
             "positive coefficients: circle sup attained at angle 0 equals the coefficient sum, K=" +
                 std::to_string(K));
  }
  ck.finish();
  return rec;
}

// gap coefficients (k+1)^{-2}: inside the p=1, alpha=0 derivative class and
// bounded, outside the p=0.5, alpha=-0.5 class.
RunRecord scn_gap_separation(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  auto nk = [](std::int64_t k) { return std::exp2(double(k)); };
  auto ak = [](std::int64_t k) { return 1.0 / double((k + 1) * (k + 1)); };
  const SpaceParams d10 = SpaceParams::dirichlet(1.0, 0.0);
  const SpaceParams dq = SpaceParams::dirichlet(0.5, -0.5);
  const SpaceParams sup_sp = SpaceParams::hinfty();
  const std::vector<std::int64_t> dial = {16, 32, 64, 128};

  auto trace_of = [&](const SpaceParams& sp) {
    std::vector<RefinementPoint> pts;
    for (std::int64_t K : dial) pts.push_back({K, gap_char_direct(sp, K, nk, ak)});
    return pts;
  };

  ck.expect(push_trace(rec, "membership-sum", d10.label(), trace_of(d10)), Verdict::bounded,
            "p=1 membership sum converges");
  ck.expect(push_trace(rec, "membership-sum", sup_sp.label(), trace_of(sup_sp)), Verdict::bounded,
            "absolute coefficient sum converges");
  ck.expect(push_trace(rec, "membership-sum", dq.label(), trace_of(dq)), Verdict::diverging,
            "p=0.5 membership sum diverges");
  const auto blc = trace_of(SpaceParams::bloch());
  ck.expect(push_trace(rec, "membership-sup", "bloch", blc), Verdict::bounded,
            "gap Bloch sup is the largest coefficient");
  ck.check(std::abs(blc.back().value - 0.25) <= 1e-15, "largest coefficient is exactly 1/4");

  const LacunarySpec spec10 = dyadic_gap(10, ak);
  for (std::int64_t K = 7; K <= 10; ++K) {
    const std::int64_t deg = std::int64_t{1} << K;
    const CoeffSeries f = lacunary_to_dense(spec10.prefix(static_cast<std::size_t>(K)), deg);
    const auto [rg, cg] = grids_for(deg, cfg);
    const double integral = dirichlet_seminorm(f, 1.0, 0.0, rg, cg).value;  // p=1: norm == integral
    const double ch = gap_char_direct(d10, K, nk, ak);
    add_row(rec, "seminorm-integral-quadrature", d10.label(), K, integral);
    ck.check(integral >= ch / 8.0 && integral <= ch * 8.0,
             "p=1 quadrature integral tracks the membership sum at K=" + std::to_string(K) +
                 " (ratio " + fmt(integral / ch) + ")");
    const double sup = norm_estimate(f, sup_sp, rg, cg).value;
    const double coef_sum = gap_char_direct(sup_sp, K, nk, ak);
    ck.check(std::abs(sup - coef_sum) <= 1e-9 * std::max(1.0, coef_sum),
             "circle sup equals the positive coefficient sum at K=" + std::to_string(K));
  }
  ck.finish();
  return rec;
}

// full-series coefficients n^{-1.5}: every sign pattern keeps the l^1 sum
// finite and the l^0.5 sum divergent; Bloch size is sign-stable up to
// absolute constants.
RunRecord scn_random_sign_power_decay(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const std::vector<std::int64_t> dial = {256, 512, 1024, 2048};

  auto sum_to = [&](double expo, std::int64_t kmax) {
    double s = 0.0;
    for (std::int64_t n = 1; n <= kmax; ++n) s += std::pow(double(n), -expo);
    return s;
  };
  auto trace_exp = [&](double expo) {
    std::vector<RefinementPoint> pts;
    for (std::int64_t K : dial) pts.push_back({K, sum_to(expo, K)});
    return pts;
  };

  // |a_n|^p with a_n = n^{-1.5}: p=1 -> exponent 1.5, p=0.5 -> 0.75, p=2 -> 3
  ck.expect(push_trace(rec, "coefficient-power-sum[p=1]", "sequence", trace_exp(1.5)), Verdict::bounded,
            "l^1 power sum converges");
  ck.expect(push_trace(rec, "coefficient-power-sum[p=0.5]", "sequence", trace_exp(0.75)),
            Verdict::diverging, "l^0.5 power sum diverges");
  ck.expect(push_trace(rec, "coefficient-power-sum[p=2]", "sequence", trace_exp(3.0)), Verdict::bounded,
            "l^2 power sum converges");

  // sign flips change no power sum, bit for bit
  {
    const SignSequence s = sample_signs(2049, cfg.seed + 31);
    bool all_pm = true;
    for (int v : s.signs) all_pm = all_pm && (v == 1 || v == -1);
    ck.check(all_pm, "seeded signs are plus-minus one only");
    double resum = 0.0, base = 0.0;
    for (std::int64_t n = 1; n <= 2048; ++n) {
      base += std::pow(std::abs(std::pow(double(n), -1.5)), 0.5);
      resum += std::pow(std::abs(double(s.signs[static_cast<std::size_t>(n)]) * std::pow(double(n), -1.5)), 0.5);
    }
    ck.check(resum == base, "sign-flipped l^0.5 sum is bitwise identical");
  }

  // known sign structure at t = 1/3: alternation until the mantissa runs out
  {
    const SignSequence a = sample_signs(40, 1.0 / 3.0);
    bool alt = !a.dyadic_breakpoint;
    for (std::size_t n = 0; n < a.signs.size(); ++n) alt = alt && (a.signs[n] == ((n % 2 == 0) ? 1 : -1));
    ck.check(alt, "t=1/3 alternates +,-,+,- for the first 40 signs");
    const SignSequence b = sample_signs(200, 1.0 / 3.0);
    ck.check(b.dyadic_breakpoint, "any double t hits the dyadic breakpoint set eventually");
  }

  // quadrature: Bloch size of the unsigned and one signed truncation
  {
    const std::int64_t deg = 1024;
    std::vector<cplx> c(static_cast<std::size_t>(deg) + 1, cplx{0.0, 0.0});
    for (std::int64_t n = 1; n <= deg; ++n) c[static_cast<std::size_t>(n)] = std::pow(double(n), -1.5);
    const CoeffSeries f(std::move(c));
    const CoeffSeries ft = randomize(f, sample_signs(static_cast<std::size_t>(deg) + 1, cfg.seed + 37));
    const auto [rg, cg] = grids_for(deg, cfg);
    std::vector<RefinementPoint> tb, tt;
    for (std::int64_t n : {128, 256, 512, 1024}) {
      tb.push_back({n, norm_estimate(block_partial_sum(f, 0, n + 1), SpaceParams::bloch(), rg, cg).value});
      tt.push_back({n, norm_estimate(block_partial_sum(ft, 0, n + 1), SpaceParams::bloch(), rg, cg).value});
    }
    ck.expect(push_trace(rec, "derivative-sup", "bloch", tb), Verdict::bounded,
              "unsigned truncations have stable Bloch size");
    ck.expect(push_trace(rec, "derivative-sup-signed", "bloch", tt), Verdict::bounded,
              "signed truncations have stable Bloch size");
    const double ratio = tt.back().value / tb.back().value;
    add_row(rec, "sign-stability-ratio", "bloch", deg, ratio);
    ck.check(ratio >= 0.125 && ratio <= 8.0,
             "sign pattern moves the Bloch size by a bounded factor only, ratio " + fmt(ratio));
  }
  ck.finish();
  return rec;
}

// paired recursion phi_k = phi_{k-1} + u_k z^{n_k} h_{k-1},
// h_k = h_{k-1} - conj(u_k) z^{-n_k} phi_{k-1} with u_k = 1/(k+1), n_k = 4^k:
// uniformly bounded factors, harmonically divergent skeleton coefficients.
RunRecord scn_interpolation_separation(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const int K = 16;
  std::vector<cplx> u;
  std::vector<std::int64_t> n;
  for (int k = 0; k < K; ++k) {
    u.emplace_back(1.0 / double(k + 1), 0.0);
    n.push_back(std::int64_t{1} << (2 * k));  // 4^k
  }
  const FournierInput input(u, n);
  const FournierResult res = fournier_construct(input, 4096);

  ck.check(res.cert.max_coeff_error <= 1e-12,
           "skeleton coefficients are interpolated exactly, error " + fmt(res.cert.max_coeff_error));
  ck.check(res.cert.identity_residual <= 1e-9,
           "pointwise energy identity holds, residual " + fmt(res.cert.identity_residual));
  ck.check(res.cert.lambda_support_ok, "support stays inside the disjoint frequency blocks");
  bool blocks_ok = true;
  for (const BlockBound& b : res.cert.blocks) {
    blocks_ok = blocks_ok && b.sup_estimate <= b.bound * (1.0 + 1e-6) + 1e-12;
    add_row(rec, "block-sup", "hinfty", b.k, b.sup_estimate);
    add_row(rec, "block-bound", "hinfty", b.k, b.bound);
  }
  ck.check(blocks_ok, "every frequency block obeys its weighted sup bound");

  // skeleton coefficient sums: the harmonic numbers, exactly
  std::vector<RefinementPoint> interp;
  for (std::int64_t kp : {2, 4, 8, 16}) {
    double s = 0.0, h = 0.0;
    for (std::int64_t k = 0; k < kp; ++k) {
      s += std::abs(res.phi.coeff(n[static_cast<std::size_t>(k)]));
      h += 1.0 / double(k + 1);
    }
    ck.check(std::abs(s - h) <= 1e-12, "skeleton sum at K'=" + std::to_string(kp) + " equals H_{K'}");
    ck.check(s >= std::log(double(kp)), "skeleton sum dominates log K' at K'=" + std::to_string(kp));
    interp.push_back({kp, s});
  }
  ck.expect(push_trace(rec, "interp-abs-partial-sum", SpaceParams::dirichlet(1.0, 0.0).label(), interp),
            Verdict::diverging, "absolute skeleton sums grow without bound");

  // intermediate states: measured circle sups against the exact energy
  // envelope sqrt(prod (1+u_j^2)); the envelope is what gets classified
  // (measured sups inherit its boundedness through the identity)
  const CircleGrid supgrid(1024);
  SparseLaurent phi = SparseLaurent::monomial(u[0], n[0]);
  SparseLaurent h = SparseLaurent::monomial(cplx{1.0, 0.0}, 0);
  std::vector<RefinementPoint> env, hsup, psup;
  double prod = 1.0 + std::norm(u[0]);
  for (int k = 1; k < K; ++k) {
    std::tie(phi, h) = fournier_step(phi, h, u[static_cast<std::size_t>(k)], n[static_cast<std::size_t>(k)]);
    prod *= 1.0 + std::norm(u[static_cast<std::size_t>(k)]);
    const int s = k + 1;
    if (s == 4 || s == 8 || s == 12 || s == 16) {
      const double sh = grid_sup(h, supgrid);
      const double sp = grid_sup(phi, supgrid);
      const double mp = grid_min(phi, supgrid);
      env.push_back({s, std::sqrt(prod)});
      hsup.push_back({s, sh});
      psup.push_back({s, sp});
      ck.check(sh <= std::sqrt(prod) + 1e-9 && sp <= std::sqrt(prod) + 1e-9,
               "both factors sit under the energy envelope at step " + std::to_string(s));
      ck.check(sh >= std::sqrt(std::max(0.0, prod - mp * mp)) - 1e-6,
               "identity forces the co-factor sup up where the factor dips, step " + std::to_string(s));
      const double rid = verify_identity(phi, h, std::span<const cplx>(u).first(static_cast<std::size_t>(s)),
                                         supgrid);
      ck.check(rid <= 1e-8, "energy identity at step " + std::to_string(s) + ", residual " + fmt(rid));
    }
  }
  push_trace(rec, "factor-sup", "hinfty", hsup);
  push_trace(rec, "factor-sup-analytic", "hinfty", psup);
  ck.expect(push_trace(rec, "sup-envelope", "hinfty", env), Verdict::bounded,
            "energy envelope converges (so both sups stay bounded)");
  ck.check(psup.back().value <= 1.9174, "analytic factor sup stays under the full-product envelope");

  // dense cross-checks at K=8 (top frequency 16384 admits a dense dump)
  {
    std::vector<cplx> u8(u.begin(), u.begin() + 8);
    std::vector<std::int64_t> n8(n.begin(), n.begin() + 8);
    const FournierResult r8 = fournier_construct(FournierInput(u8, n8), 2048);
    ck.check(!r8.psi.empty(), "dense dump present when the top frequency fits");
    bool interp_ok = true;
    for (int k = 0; k < 8; ++k) {
      interp_ok = interp_ok && std::abs(r8.psi.coeff(n8[static_cast<std::size_t>(k)]) -
                                        u8[static_cast<std::size_t>(k)]) <= 1e-15;
    }
    ck.check(interp_ok, "dense dump interpolates the skeleton exactly");
    double csum = 0.0;
    for (const cplx& cc : r8.psi.coeffs()) csum += std::norm(cc);
    const auto [rg, cg] = grids_for(r8.psi.degree(), cfg);
    const double h2 = hardy_norm(r8.psi, 2.0, rg, cg).value;
    ck.check(std::abs(sq(h2) - csum) <= 1e-10 * std::max(1.0, csum),
             "dense Hardy-2 energy equals the coefficient energy");
    double prod8 = 1.0;
    for (const cplx& uu : u8) prod8 *= 1.0 + std::norm(uu);
    const double sup8 = norm_estimate(r8.psi, SpaceParams::hinfty(), rg, cg).value;
    add_row(rec, "dense-circle-sup", "hinfty", 8, sup8);
    ck.check(sup8 <= std::sqrt(prod8) + 1e-6, "dense circle sup sits under its energy envelope");
  }
  ck.finish();
  return rec;
}

// gap symbols between p=0.5 derivative-Bloch intersections: coefficients
// 2^-k pass the three-part test (bounded, log-derivative sup, membership
// sum); coefficients k^-2 fail exactly at the membership sum.
RunRecord scn_gap_multiplier_criterion(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  auto nk = [](std::int64_t k) { return std::exp2(double(k)); };
  auto a_plus = [](std::int64_t k) { return std::exp2(-double(k)); };
  auto a_minus = [](std::int64_t k) { return 1.0 / double(k * k); };
  const SpaceParams x = SpaceParams::dirichlet(0.5, -0.5);
  const SpaceParams y = x;
  const SpaceParams sup_sp = SpaceParams::hinfty();
  const SpaceParams blog = SpaceParams::log_bloch(1.0);
  const std::vector<std::int64_t> dial = {16, 32, 64, 128};

  auto trace_of = [&](const SpaceParams& sp, const std::function<double(std::int64_t)>& ak) {
    std::vector<RefinementPoint> pts;
    for (std::int64_t K : dial) pts.push_back({K, gap_char_direct(sp, K, nk, ak)});
    return pts;
  };

  // symbol with coefficients 2^-k: all three conditions hold
  ck.expect(push_trace(rec, "plus/membership-sum", sup_sp.label(), trace_of(sup_sp, a_plus)),
            Verdict::bounded, "2^-k symbol: coefficient sum bounded");
  ck.expect(push_trace(rec, "plus/membership-sup", blog.label(), trace_of(blog, a_plus)),
            Verdict::bounded, "2^-k symbol: log-derivative sup bounded");
  ck.expect(push_trace(rec, "plus/membership-sum", y.label(), trace_of(y, a_plus)), Verdict::bounded,
            "2^-k symbol: p=0.5 membership sum bounded");

  // symbol with coefficients k^-2: bounded, log-derivative sup fine, but the
  // membership sum is harmonic
  ck.expect(push_trace(rec, "minus/membership-sum", sup_sp.label(), trace_of(sup_sp, a_minus)),
            Verdict::bounded, "k^-2 symbol: coefficient sum bounded");
  ck.expect(push_trace(rec, "minus/membership-sup", blog.label(), trace_of(blog, a_minus)),
            Verdict::bounded, "k^-2 symbol: log-derivative sup bounded");
  ck.expect(push_trace(rec, "minus/membership-sum", y.label(), trace_of(y, a_minus)), Verdict::diverging,
            "k^-2 symbol: p=0.5 membership sum diverges");

  // quadrature: box constants of the derivative weight for the passing symbol
  {
    const LacunarySpec spec = dyadic_gap(10, a_plus);
    const CoeffSeries g = lacunary_to_dense(spec, 1 << 10);
    std::vector<RefinementPoint> pts;
    for (std::int64_t nn : {128, 256, 512, 1024}) {
      const CoeffSeries gn = block_partial_sum(g, 0, nn + 1);
      const auto [rg, cg] = grids_for(nn, cfg);
      const SampledDensity d = SampledDensity::derivative_weight(gn, 0.5, rg, cg);
      pts.push_back({nn, carleson_constant(d, auto_box_level(rg, cg)).value});
    }
    const Verdict v = push_trace(rec, "plus/box-constant", y.label(), pts);
    ck.check(v != Verdict::diverging, "2^-k symbol: box constants of the derivative weight do not blow up");
  }

  // operator table: the passing symbol against a small family.  The p=0.5
  // norm squares the trace growth ratio, so the window has to reach deep
  // enough (2^12) for the geometric coefficient tail to fall below the
  // bounded threshold.
  {
    const CoeffSeries gp = lacunary_to_dense(dyadic_gap(12, a_plus), 1 << 12);
    std::vector<LabeledSeries> family;
    family.push_back({"one", CoeffSeries(std::vector<cplx>{1.0})});
    family.push_back({"z", CoeffSeries(std::vector<cplx>{0.0, 1.0})});
    family.push_back({"mobius", mobius_series(0.5, 512)});
    family.push_back({"gap-quadratic",
                      lacunary_to_dense(dyadic_gap(9, [](std::int64_t k) { return 1.0 / double(k * k); }), 512)});
    const MultiplierTable tab = multiplier_report(gp, family, x, y, {6, 7, 8, 9, 10, 11, 12});
    bool ok = true;
    for (const auto& row : tab.rows) {
      ok = ok && row.fg_trend != Verdict::diverging;
      add_row(rec, "plus/product-norm[" + row.f_label + "]", y.label(), 1 << 12, row.fg_norm_y);
    }
    ck.check(ok, "products with the 2^-k symbol keep stable target norms across the family");
    ck.check(tab.max_ratio < 1e3, "operator ratio table stays finite, max " + fmt(tab.max_ratio));
  }

  // operator table: the failing symbol already blows up on f = 1
  {
    const CoeffSeries gm = lacunary_to_dense(dyadic_gap(10, a_minus), 1 << 10);
    std::vector<LabeledSeries> family;
    family.push_back({"one", CoeffSeries(std::vector<cplx>{1.0})});
    const MultiplierTable tab = multiplier_report(gm, family, x, y, {5, 6, 7, 8, 9, 10});
    ck.expect(tab.rows.front().fg_trend, Verdict::diverging,
              "k^-2 symbol applied to the constant climbs in the target norm");
    add_row(rec, "minus/product-norm[one]", y.label(), 1024, tab.rows.front().fg_norm_y);
  }
  ck.finish();
  return rec;
}

// four logarithmic estimates ordered as
// box-log^2  ->  log-derivative-sup(1)  ->  log-derivative-sup(0.75)  ->  box:
// across a twelve-function suite no function stabilizes on an inner estimate
// while diverging on an outer one.
RunRecord scn_log_embedding_chain(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const std::vector<std::int64_t> dial = {1 << 10, 1 << 11, 1 << 12, 1 << 13};

  // the chain, inner to outer
  const std::array<std::string, 4> arm_name = {"box-sup-log2", "log-derivative-sup[a=1]",
                                               "log-derivative-sup[a=0.75]", "box-sup"};
  const std::array<std::string, 4> arm_space = {SpaceParams::bmoa_log().label(),
                                                SpaceParams::log_bloch(1.0).label(),
                                                SpaceParams::log_bloch(0.75).label(),
                                                SpaceParams::bmoa().label()};

  struct SuiteFn {
    std::string id;
    std::function<CoeffSeries(std::int64_t)> at;  // truncation at degree N
    std::array<int, 4> want;                      // -1 unchecked, else Verdict
  };
  const int B = static_cast<int>(Verdict::bounded);
  const int D = static_cast<int>(Verdict::diverging);

  const CoeffSeries poly64 = random_poly(64, cfg.seed + 21);
  const CoeffSeries z50 = [] {
    std::vector<cplx> c(51, cplx{0.0, 0.0});
    c[50] = 1.0;
    return CoeffSeries(std::move(c));
  }();
  auto gap_fn = [](const std::function<double(std::int64_t)>& ak) {
    return [ak](std::int64_t N) {
      std::int64_t kmax = 0;
      while ((std::int64_t{1} << (kmax + 1)) <= N) ++kmax;
      return lacunary_to_dense(dyadic_gap(kmax, ak), N);
    };
  };
  const SignSequence gap_signs = sample_signs(20, cfg.seed + 41);
  const SignSequence dense_signs = sample_signs((1 << 13) + 1, cfg.seed + 43);
  const CoeffSeries psi = [&] {
    std::vector<cplx> u;
    std::vector<std::int64_t> n;
    for (int k = 0; k < 8; ++k) {
      u.emplace_back(1.0 / double(k + 1), 0.0);
      n.push_back(std::int64_t{1} << (2 * k));
    }
    return fournier_construct(FournierInput(u, n), 1024).psi;
  }();

  std::vector<SuiteFn> suite;
  suite.push_back({"monomial", [](std::int64_t) { return CoeffSeries(std::vector<cplx>{0.0, 1.0}); },
                   {B, B, B, B}});
  suite.push_back({"fixed-poly", [&](std::int64_t) { return poly64; }, {B, B, B, B}});
  suite.push_back({"mobius-half", [](std::int64_t N) { return mobius_series(0.5, N); }, {B, B, B, B}});
  suite.push_back({"log-kernel", [](std::int64_t N) { return log_kernel_series(0.0, N); }, {D, D, D, B}});
  suite.push_back({"gap-inverse-square", gap_fn([](std::int64_t k) { return 1.0 / double(k * k); }),
                   {B, B, B, B}});
  suite.push_back({"gap-slow", gap_fn([](std::int64_t k) { return std::pow(double(k), -0.75); }),
                   {-1, -1, B, B}});
  suite.push_back({"gap-steep", gap_fn([](std::int64_t k) { return std::pow(double(k + 1), -10.0 / 3.0); }),
                   {B, B, B, B}});
  suite.push_back({"paired-recursion",
                   [&](std::int64_t N) { return block_partial_sum(psi, 0, N + 1); },
                   {-1, -1, -1, B}});
  suite.push_back({"gap-inverse-square-signed",
                   [&](std::int64_t N) {
                     std::int64_t kmax = 0;
                     while ((std::int64_t{1} << (kmax + 1)) <= N) ++kmax;
                     return lacunary_to_dense(
                         flip_signs(dyadic_gap(kmax, [](std::int64_t k) { return 1.0 / double(k * k); }),
                                    gap_signs),
                         N);
                   },
                   {-1, -1, -1, -1}});
  suite.push_back({"log-kernel-signed",
                   [&](std::int64_t N) { return randomize(log_kernel_series(0.0, N), dense_signs); },
                   {-1, -1, -1, -1}});
  suite.push_back({"mobius-tall", [](std::int64_t N) { return mobius_series(cplx(0.0, 0.9), N); },
                   {B, B, B, B}});
  suite.push_back({"monomial-50", [&](std::int64_t) { return z50; }, {B, B, B, B}});

  for (const SuiteFn& fn : suite) {
    std::array<std::vector<RefinementPoint>, 4> arms;
    for (std::int64_t N : dial) {
      const CoeffSeries f = fn.at(N);
      const auto [rg, cg] = grids_for(N, cfg);
      const int ml = auto_box_level(rg, cg);
      const SampledDensity d = SampledDensity::derivative_weight(f, 2.0, rg, cg);
      arms[0].push_back({N, log_carleson_constant(d, 2.0, ml).value});
      arms[1].push_back({N, log_bloch_seminorm(f, 1.0, rg, cg).value});
      arms[2].push_back({N, log_bloch_seminorm(f, 0.75, rg, cg).value});
      arms[3].push_back({N, carleson_constant(d, ml).value});
    }
    std::array<Verdict, 4> v{};
    for (int a = 0; a < 4; ++a) {
      v[a] = push_trace(rec, fn.id + "/" + arm_name[a], arm_space[a], arms[a]);
      if (fn.want[a] >= 0) {
        ck.expect(v[a], static_cast<Verdict>(fn.want[a]), fn.id + ": " + arm_name[a]);
      }
    }
    bool chain_ok = true;
    for (int a = 0; a + 1 < 4; ++a) {
      chain_ok = chain_ok && !(v[a] == Verdict::bounded && v[a + 1] == Verdict::diverging);
    }
    ck.check(chain_ok, fn.id + ": no inner estimate stabilizes while an outer one diverges");
  }
  ck.finish();
  return rec;
}

// gap coefficients (k+1)^{-10/3} at p=0.3: the square-log-cubed coefficient
// sum converges while the membership sum diverges, for every sign pattern.
RunRecord scn_random_gap_tail(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  auto nk = [](std::int64_t k) { return std::exp2(double(k)); };
  auto ak = [](std::int64_t k) { return std::pow(double(k + 1), -10.0 / 3.0); };
  const SpaceParams dq = SpaceParams::dirichlet(0.3, -0.7);

  // square-log-cubed sum: converges fast
  auto logsum_to = [&](std::int64_t kmax) {
    double s = 0.0;
    for (std::int64_t k = 1; k <= kmax; ++k) s += sq(ak(k)) * std::pow(double(k) * kLn2, 3.0);
    return s;
  };
  std::vector<RefinementPoint> ls;
  for (std::int64_t K : {8, 16, 32, 64}) ls.push_back({K, logsum_to(K)});
  ck.expect(push_trace(rec, "square-log-cubed-sum", "sequence", ls), Verdict::bounded,
            "coefficient square-log-cubed sum converges");
  ck.check((ls[3].value - ls[2].value) / ls[3].value < 0.01,
           "last doubling moves the square-log-cubed sum by under 1%");

  // library cross-check on a dense truncation
  {
    const CoeffSeries f = lacunary_to_dense(dyadic_gap(14, ak), 1 << 14);
    const double lib = coefficient_log_sum(f, 3.0);
    const double direct = logsum_to(14);
    ck.check(std::abs(lib - direct) <= 1e-10 * std::max(1.0, direct),
             "dense square-log-cubed sum matches the direct sum at K=14");
  }

  // membership sum at p=0.3: harmonic growth
  std::vector<RefinementPoint> ms;
  for (std::int64_t K : {16, 32, 64, 128}) ms.push_back({K, gap_char_direct(dq, K, nk, ak)});
  ck.expect(push_trace(rec, "membership-sum", dq.label(), ms), Verdict::diverging,
            "p=0.3 membership sum diverges");

  // 50 sign draws: the sum is sign-invariant bit for bit and strictly grows
  bool invariant = true, monotone = true;
  for (int draw = 0; draw < 50; ++draw) {
    const SignSequence s = sample_signs(129, cfg.seed + 1000 + draw);
    double prev = 0.0;
    std::size_t di = 0;
    for (std::int64_t K : {16, 32, 64, 128}) {
      double v = 0.0;
      for (std::int64_t k = 1; k <= K; ++k) {
        v += std::pow(std::abs(double(s.signs[static_cast<std::size_t>(k)]) * ak(k)), 0.3);
      }
      invariant = invariant && (v == ms[di].value);
      monotone = monotone && (v > prev);
      prev = v;
      ++di;
    }
  }
  ck.check(invariant, "membership sum identical across all 50 sign draws (bit for bit)");
  ck.check(monotone, "membership sum strictly increases along the dial for every draw");

  // quadrature corroboration: two-log box constants of one signed truncation
  {
    const SignSequence s0 = sample_signs(129, cfg.seed + 1000);
    const LacunarySpec spec = flip_signs(dyadic_gap(10, ak), [&] {
      SignSequence t = s0;
      t.signs.erase(t.signs.begin());  // gap index k starts at 1
      return t;
    }());
    const CoeffSeries ft = lacunary_to_dense(spec, 1 << 10);
    std::vector<RefinementPoint> pts;
    for (std::int64_t nn : {128, 256, 512, 1024}) {
      const CoeffSeries fn = block_partial_sum(ft, 0, nn + 1);
      const auto [rg, cg] = grids_for(nn, cfg);
      const SampledDensity d = SampledDensity::derivative_weight(fn, 2.0, rg, cg);
      pts.push_back({nn, log_carleson_constant(d, 2.0, auto_box_level(rg, cg)).value});
    }
    const Verdict v = push_trace(rec, "box-sup-log2-signed", SpaceParams::bmoa_log().label(), pts);
    ck.check(v != Verdict::diverging, "two-log box constants of the signed series do not blow up");
  }
  ck.finish();
  return rec;
}

// (1-r) log^2(1/(1-r)) weighted integral of the squared circle sup of f':
// stabilizes for gap decay (k+1)^{-3}, climbs steadily for (k+1)^{-1}.
RunRecord scn_weighted_sup_integral(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const std::vector<std::int64_t> dial = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};

  auto run_arm = [&](const std::string& tag, double expo, int draws, Verdict want) {
    auto ak = [expo](std::int64_t k) { return std::pow(double(k + 1), -expo); };
    std::vector<double> top_values;
    for (int d = 0; d < draws; ++d) {
      const SignSequence s = sample_signs(16, cfg.seed + 500 + 17 * d);
      std::vector<RefinementPoint> pts;
      for (std::int64_t N : dial) {
        std::int64_t kmax = 0;
        while ((std::int64_t{1} << (kmax + 1)) <= N) ++kmax;
        const CoeffSeries ft = lacunary_to_dense(flip_signs(dyadic_gap(kmax, ak), [&] {
                                                   SignSequence t = s;
                                                   t.signs.erase(t.signs.begin());
                                                   return t;
                                                 }()),
                                                 N);
        const auto [rg, cg] = grids_for(N, cfg, 2, 4);
        pts.push_back({N, duren_weight_integral(ft, 2.0, rg, cg).value});
      }
      ck.expect(push_trace(rec, tag + "[draw=" + std::to_string(d) + "]", "hinfty", pts), want,
                tag + " draw " + std::to_string(d));
      top_values.push_back(pts.back().value);
    }
    return top_values;
  };

  const auto bounded_tops = run_arm("weighted-sup-integral-steep", 3.0, 3, Verdict::bounded);
  const double mx = *std::max_element(bounded_tops.begin(), bounded_tops.end());
  const double mn = *std::min_element(bounded_tops.begin(), bounded_tops.end());
  ck.check(mx / mn <= 4.0,
           "sign draws move the stabilized integral by a bounded factor, spread " + fmt(mx / mn));
  run_arm("weighted-sup-integral-harmonic", 1.0, 2, Verdict::diverging);
  ck.finish();
  return rec;
}

// truncated radial integrals of |f'| along rays for the paired recursion
// series with u_k = (k+1)^{-0.8} (square-summable at p=1.5, not summable):
// growth at this scale separates nothing, so the run always ends
// inconclusive by design.
RunRecord scn_radial_divergence_probe(const RunConfig& cfg) {
  RunRecord rec;
  Checker ck(rec);
  const int K = 14;
  std::vector<cplx> u;
  std::vector<std::int64_t> n;
  for (int k = 0; k < K; ++k) {
    u.emplace_back(std::pow(double(k + 1), -0.8), 0.0);
    n.push_back(std::int64_t{1} << (2 * k));
  }
  const FournierResult res = fournier_construct(FournierInput(u, n), 2048);
  ck.check(res.cert.max_coeff_error <= 1e-12, "skeleton interpolation exact");
  ck.check(res.cert.identity_residual <= 1e-9,
           "energy identity holds, residual " + fmt(res.cert.identity_residual));
  ck.check(res.cert.lambda_support_ok, "support discipline holds");

  // derivative terms (frequency, n * c), evaluated along rays with an
  // underflow guard; weights are plain dr on dyadic midpoint cells
  std::vector<std::pair<std::int64_t, cplx>> dterms;
  for (const auto& [freq, c] : res.phi.terms()) {
    if (freq >= 1) dterms.emplace_back(freq, double(freq) * c);
  }
  const RadialGrid rg = RadialGrid::geometric_midpoint(14, 8);
  const auto nodes = rg.nodes();
  const auto wts = rg.weights();
  const int rays = 16;
  const std::vector<std::int64_t> jdial = {8, 10, 12, 14};

  int slow_growth_rays = 0;
  bool finite = true;
  for (int i = 0; i < rays; ++i) {
    const double theta = std::numbers::pi * (2.0 * i + 1.0) / double(rays);
    std::vector<double> cum(nodes.size() + 1, 0.0);
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      const double r = nodes[t];
      const double lr = std::log(r);
      cplx acc{0.0, 0.0};
      for (const auto& [freq, sc] : dterms) {
        const double ex = double(freq - 1) * lr;
        if (ex < -745.0) continue;  // r^{n-1} underflows to zero
        const double ph = std::fmod(double(freq - 1) * theta, 2.0 * std::numbers::pi);
        acc += sc * std::polar(std::exp(ex), ph);
      }
      cum[t + 1] = cum[t] + wts[t] * std::abs(acc);
    }
    std::vector<RefinementPoint> pts;
    for (std::int64_t j : jdial) {
      const double v = cum[static_cast<std::size_t>(8 * j)];  // 8 cells per dyadic level
      finite = finite && std::isfinite(v) && v > 0.0;
      pts.push_back({j, v});
    }
    const Verdict obs = classify_trace(pts);
    for (const auto& p : pts) add_row(rec, "ray-integral[i=" + std::to_string(i) + "]",
                                      SpaceParams::dirichlet(1.0, 0.0).label(), p.n, p.value);
    if (obs != Verdict::bounded) ++slow_growth_rays;
  }
  ck.check(finite, "all truncated ray integrals are finite and positive");
  ck.note("rays still growing at the deepest truncation: " + std::to_string(slow_growth_rays) + "/16");
  ck.mark_inconclusive(
      "slow radial growth at desk scale cannot separate a convergent tail from divergence; "
      "no verdict is claimed either way");
  ck.finish();
  return rec;
}

}  // namespace

// ---------------------------------------------------------------------------
// catalog and plumbing
// ---------------------------------------------------------------------------

std::string run_verdict_label(RunVerdict v) {
  switch (v) {
    case RunVerdict::pass:
      return "pass";
    case RunVerdict::fail:
      return "fail";
    case RunVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const std::vector<Scenario>& scenario_catalog() {
  static const std::vector<Scenario> catalog = [] {
    std::vector<Scenario> v;
    v.push_back({"d21-equals-h2",
                 "The p=2, alpha=1 derivative seminorm computed by quadrature matches the closed "
                 "form sum of 2n/(2n+1)|a_n|^2 and sits inside the structural envelope [2/3, 1] "
                 "of the tail Hardy-2 energy.",
                 "pass", scn_d21_equals_h2});
    v.push_back({"identity-multiplier",
                 "Multiplying by the constant 1 fixes every implemented estimate; a constant c "
                 "rescales one-homogeneous estimates by |c| and quadratic box constants by |c|^2.",
                 "pass", scn_identity_multiplier});
    v.push_back({"khinchine-bracket",
                 "Sign-averaged p-th moments against the coefficient 2-norm: exact at p=2, the "
                 "exact law 3-2/K at p=4 for K equal weights, a slow climb toward sqrt(2/pi) at "
                 "p=1, and Monte Carlo consistent with exhaustive enumeration.",
                 "pass", scn_khinchine_bracket});
    v.push_back({"beta-log-asymptotic",
                 "The r^n (1-r)^m log-power integral scales like (log n)^alpha / n^{m+1}: the "
                 "normalized ratio sits near m! and drifts under 5% over the last doubling of n.",
                 "pass", scn_beta_log_asymptotic});
    v.push_back({"hinfty-not-dq",
                 "The gap series with coefficients k^-2 on frequencies 2^k is bounded on the "
                 "disc while its p=0.5, alpha=-0.5 membership sum grows like the harmonic series.",
                 "pass", scn_hinfty_not_dq});
    v.push_back({"gap-separation",
                 "Gap coefficients (k+1)^-2 on frequencies 2^k give membership in the p=1, "
                 "alpha=0 derivative class and boundedness, while the p=0.5, alpha=-0.5 "
                 "membership sum diverges.",
                 "pass", scn_gap_separation});
    v.push_back({"random-sign-power-decay",
                 "Coefficient decay n^-1.5 puts every sign pattern in the l^1 class and none in "
                 "the l^0.5 class; sign flips leave each power sum unchanged bit for bit and "
                 "move the Bloch size only by a bounded factor.",
                 "pass", scn_random_sign_power_decay});
    v.push_back({"interpolation-separation",
                 "The paired two-term recursion with weights 1/(k+1) on frequencies 4^k keeps "
                 "both factors uniformly bounded on the circle while the absolute coefficient "
                 "sums along the frequency skeleton grow like the harmonic series.",
                 "pass", scn_interpolation_separation});
    v.push_back({"gap-multiplier-criterion",
                 "For gap symbols acting between p=0.5 derivative-Bloch intersections, the "
                 "three-part test (bounded, log-derivative sup, membership sum) passes "
                 "coefficients 2^-k and fails coefficients k^-2 exactly at the membership sum.",
                 "pass", scn_gap_multiplier_criterion});
    v.push_back({"log-embedding-chain",
                 "Across a twelve-function suite the four logarithmic estimates respect the "
                 "containment order box-log^2, log-derivative-sup(1), log-derivative-sup(0.75), "
                 "box: no function stabilizes on an inner estimate while diverging on an outer "
                 "one.",
                 "pass", scn_log_embedding_chain});
    v.push_back({"random-gap-tail",
                 "Gap coefficients (k+1)^{-10/3} give a convergent square-log-cubed coefficient "
                 "sum while the p=0.3 membership sum diverges, for every sign pattern.",
                 "pass", scn_random_gap_tail});
    v.push_back({"weighted-sup-integral",
                 "The (1-r) log^2 weighted integral of the squared circle sup of the derivative "
                 "stabilizes for gap decay (k+1)^-3 and climbs steadily for decay (k+1)^-1, for "
                 "every tested sign pattern.",
                 "pass", scn_weighted_sup_integral});
    v.push_back({"radial-divergence-probe",
                 "Truncated radial integrals of |f'| along sixteen rays for a paired-recursion "
                 "series with weights (k+1)^-0.8 grow too slowly at desk scale to separate "
                 "boundedness from divergence; the run records the data and always reports "
                 "inconclusive.",
                 "inconclusive", scn_radial_divergence_probe});
    return v;
  }();
  return catalog;
}

const Scenario* find_scenario(const std::string& name) {
  for (const Scenario& s : scenario_catalog()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::uint64_t config_hash(const std::string& scenario_name, const RunConfig& cfg) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  const char schema[] = "disclab-run-v1";
  mix(schema, sizeof schema - 1);
  mix(scenario_name.data(), scenario_name.size());
  const std::uint64_t seed = cfg.seed;
  mix(&seed, sizeof seed);
  const std::int32_t scale = cfg.scale;
  mix(&scale, sizeof scale);
  return h;
}

RunRecord run_scenario(const Scenario& s, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec = s.run(cfg);
  rec.scenario = s.name;
  rec.config_hash = config_hash(s.name, cfg);
  rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::string run_record_csv(const RunRecord& rec) {
  std::string out = "scenario,quantity,space,n,value\n";
  char buf[40];
  for (const TraceRow& r : rec.rows) {
    std::snprintf(buf, sizeof buf, "%.12e", r.value);
    out += rec.scenario;
    out += ',';
    out += r.quantity;
    out += ',';
    out += r.space;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

MultiplierTable multiplier_report(const CoeffSeries& g, const std::vector<LabeledSeries>& family,
                                  const SpaceParams& x, const SpaceParams& y,
                                  const std::vector<int>& truncation_exponents) {
  if (g.empty()) throw std::invalid_argument("multiplier_report: empty symbol");
  if (family.empty()) throw std::invalid_argument("multiplier_report: empty family");
  if (truncation_exponents.size() < 4) {
    throw std::invalid_argument("multiplier_report: need at least four truncation exponents");
  }
  for (std::size_t i = 1; i < truncation_exponents.size(); ++i) {
    if (truncation_exponents[i] <= truncation_exponents[i - 1]) {
      throw std::invalid_argument("multiplier_report: truncation exponents must increase");
    }
  }

  MultiplierTable tab;
  tab.g_label = "symbol[deg=" + std::to_string(g.degree()) + "]";
  tab.x = x;
  tab.y = y;
  tab.max_ratio = 0.0;

  const std::int64_t top = std::int64_t{1} << truncation_exponents.back();
  const RunConfig plain;
  for (const LabeledSeries& m : family) {
    const auto [rgx, cgx] = grids_for(std::max<std::int64_t>(m.f.degree(), 1), plain);
    MultiplierRow row;
    row.f_label = m.label;
    row.f_norm_x = norm_estimate(m.f, x, rgx, cgx).value;

    const CoeffSeries prod = cauchy_product(m.f, g);
    std::vector<RefinementPoint> pts;
    for (int e : truncation_exponents) {
      const std::int64_t N = std::min<std::int64_t>(std::int64_t{1} << e, top);
      const CoeffSeries sn = block_partial_sum(prod, 0, N + 1);
      const auto [rg, cg] = grids_for(N, plain);
      pts.push_back({N, norm_estimate(sn, y, rg, cg).value});
    }
    row.fg_norm_y = pts.back().value;
    row.fg_trend = classify_trace(pts);
    row.ratio = row.fg_norm_y / std::max(row.f_norm_x, 1e-300);
    tab.max_ratio = std::max(tab.max_ratio, row.ratio);
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

}  // namespace disclab
