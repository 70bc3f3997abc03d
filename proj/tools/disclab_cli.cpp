// disclab: estimates, constructions, and scripted experiments for analytic
// series on the unit disc.
//
// subcommands
//   norm      norm/seminorm estimate of a coefficient series in one space
//   fournier  paired two-term recursion with certificate output
//   random    sign sequences, moment ratios, weighted sup integrals
//   lacunary  gap-series membership statistic with a refinement verdict
//   scenario  list / run the scripted experiment catalog
//
// exit codes: scenario runs map their verdict to 0 (pass), 1 (fail),
// 2 (inconclusive); `scenario run --all` reports the worst verdict.  All
// other subcommands exit 0 on success and 1 on bad input or I/O trouble.
//
// output directory: --out flag, else $DISCLAB_OUT, else (for scenario runs)
// the current directory.  Files are written to <name>.tmp and renamed, so a
// crash never leaves a half-written record.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "disclab/fournier.hpp"
#include "disclab/random_series.hpp"
#include "disclab/scenarios.hpp"
#include "disclab/serialize.hpp"
#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

namespace {

using namespace disclab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << bytes;
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string resolve_out(const std::string& flag_value, bool default_cwd) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("DISCLAB_OUT"); env && *env) return env;
  return default_cwd ? "." : "";
}

void emit(const std::string& out_dir, const std::string& filename, const std::string& bytes) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  atomic_write(std::filesystem::path(out_dir) / filename, bytes);
}

SpaceParams make_space(const std::string& kind, const std::string& p_text, double alpha) {
  double p = 2.0;
  if (p_text == "inf") {
    p = std::numeric_limits<double>::infinity();
  } else if (!p_text.empty()) {
    std::size_t pos = 0;
    p = std::stod(p_text, &pos);
    if (pos != p_text.size()) throw std::runtime_error("bad --p value '" + p_text + "'");
  }
  if (kind == "hardy") return std::isinf(p) ? SpaceParams::hinfty() : SpaceParams::hardy(p);
  if (kind == "hinfty") return SpaceParams::hinfty();
  if (kind == "bergman") return SpaceParams::bergman(p, alpha);
  if (kind == "dirichlet") return SpaceParams::dirichlet(p, alpha);
  if (kind == "bloch") return SpaceParams::bloch();
  if (kind == "logbloch") return SpaceParams::log_bloch(alpha);
  if (kind == "bmoa") return SpaceParams::bmoa();
  if (kind == "bmoalog") return SpaceParams::bmoa_log();
  throw std::runtime_error("unknown space kind '" + kind + "'");
}

int pow2_at_least(std::int64_t n) {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

struct GridChoice {
  int levels = 0;  // 0 = derive from degree
  int cells = 4;
  int points = 0;  // 0 = derive from degree
};

void add_grid_flags(CLI::App* cmd, GridChoice& g) {
  cmd->add_option("--levels", g.levels, "dyadic radial levels (0 = auto from degree)");
  cmd->add_option("--cells", g.cells, "cells per radial level")->check(CLI::PositiveNumber);
  cmd->add_option("--points", g.points, "circle sample count (0 = auto from degree)");
}

std::pair<RadialGrid, CircleGrid> grids_for_degree(std::int64_t degree, const GridChoice& g) {
  int levels = g.levels;
  if (levels <= 0) {
    int lg = 0;
    while ((std::int64_t{1} << lg) < std::max<std::int64_t>(degree, 1)) ++lg;
    levels = std::clamp(lg + 4, 8, 20);
  }
  int points = g.points;
  if (points <= 0) points = pow2_at_least(std::max<std::int64_t>(2 * degree + 1, 256));
  return {RadialGrid::geometric_midpoint(levels, g.cells), CircleGrid(points)};
}

// ---- norm ------------------------------------------------------------------

int cmd_norm(const std::string& input, const std::string& kind, const std::string& p_text,
             double alpha, const GridChoice& gc, const std::vector<int>& refine,
             const std::string& out_flag, const std::string& name) {
  const CoeffSeries f = series_from_json(slurp(input));
  const SpaceParams sp = make_space(kind, p_text, alpha);
  const auto [rg, cg] = grids_for_degree(f.degree(), gc);

  NormEstimate est;
  if (refine.empty()) {
    est = norm_estimate(f, sp, rg, cg);
  } else {
    if (refine.size() != 2 || refine[0] < 0 || refine[1] <= refine[0]) {
      throw std::runtime_error("--refine wants two exponents j0 < j1");
    }
    std::vector<std::int64_t> ns;
    for (int j = refine[0]; j <= refine[1]; ++j) {
      ns.push_back(std::min<std::int64_t>(std::int64_t{1} << j, f.degree()));
    }
    est = refinement_study(
        [&](std::int64_t n) { return norm_estimate(block_partial_sum(f, 0, n + 1), sp, rg, cg).value; },
        ns);
  }

  const std::string report = norm_report_json(sp, est);
  std::cout << report;
  emit(resolve_out(out_flag, false), name + ".json", report);
  return 0;
}

// ---- fournier --------------------------------------------------------------

int cmd_fournier(const std::string& input, int harmonic, int samples, bool dense,
                 const std::string& out_flag, const std::string& name) {
  FournierInput in = [&] {
    if (!input.empty()) return fournier_input_from_json(slurp(input));
    if (harmonic <= 0 || harmonic > 31) {
      throw std::runtime_error("--harmonic wants 1 <= K <= 31 (frequencies 4^k must fit an int64)");
    }
    std::vector<cplx> u;
    std::vector<std::int64_t> n;
    for (int k = 0; k < harmonic; ++k) {
      u.emplace_back(1.0 / double(k + 1), 0.0);
      n.push_back(std::int64_t{1} << (2 * k));
    }
    return FournierInput(std::move(u), std::move(n));
  }();

  const FournierResult res = fournier_construct(in, samples);
  const std::string cert = certificate_to_json(res.cert);
  std::cout << cert;
  const std::string out_dir = resolve_out(out_flag, false);
  emit(out_dir, name + ".json", cert);
  if (dense) {
    if (res.psi.empty()) {
      std::cerr << "note: top frequency exceeds the dense dump limit; no coefficient dump written\n";
    } else {
      const std::string psi = series_to_json(res.psi);
      if (out_dir.empty()) {
        std::cout << psi;
      } else {
        emit(out_dir, name + "_psi.json", psi);
      }
    }
  }
  return 0;
}

// ---- random ----------------------------------------------------------------

int cmd_random_khinchine(const std::string& coeffs_path, int equal, double p, std::int64_t trials,
                         std::uint64_t seed, int draws, const std::string& out_flag,
                         const std::string& name) {
  std::vector<cplx> c;
  if (!coeffs_path.empty()) {
    const CoeffSeries f = series_from_json(slurp(coeffs_path));
    c.assign(f.coeffs().begin(), f.coeffs().end());
  } else {
    if (equal <= 0) throw std::runtime_error("need --coeffs FILE or --equal K");
    c.assign(static_cast<std::size_t>(equal), cplx{1.0, 0.0});
  }
  if (draws < 1) throw std::runtime_error("--draws must be >= 1");

  // independent draws partition the seed space as seed + i, so a parallel
  // split reproduces the same rows in any order
  std::string csv = "draw,p,method,trials,ratio\n";
  std::string last_report;
  for (int i = 0; i < draws; ++i) {
    const KhinchineReport rep = khinchine_ratio(c, p, trials, seed + static_cast<std::uint64_t>(i));
    char row[128];
    std::snprintf(row, sizeof row, "%d,%g,%s,%lld,%.12e\n", i, rep.p,
                  rep.method == KhinchineReport::Method::exhaustive ? "exhaustive" : "monte-carlo",
                  static_cast<long long>(rep.trials), rep.ratio);
    csv += row;
    last_report = khinchine_to_json(rep);
  }
  std::cout << last_report;
  const std::string out_dir = resolve_out(out_flag, false);
  emit(out_dir, name + ".json", last_report);
  emit(out_dir, name + ".csv", csv);
  return 0;
}

int cmd_random_signs(std::size_t count, double t, bool has_t, std::uint64_t seed,
                     const std::string& out_flag, const std::string& name) {
  const SignSequence s = has_t ? sample_signs(count, t) : sample_signs(count, seed);
  const std::string rep = signs_to_json(s);
  std::cout << rep;
  std::string csv = "n,sign\n";
  for (std::size_t n = 0; n < s.signs.size(); ++n) {
    csv += std::to_string(n) + "," + std::to_string(s.signs[n]) + "\n";
  }
  const std::string out_dir = resolve_out(out_flag, false);
  emit(out_dir, name + ".json", rep);
  emit(out_dir, name + ".csv", csv);
  return 0;
}

int cmd_random_duren(const std::string& input, double power, const GridChoice& gc,
                     const std::string& out_flag, const std::string& name) {
  const CoeffSeries f = series_from_json(slurp(input));
  const auto [rg, cg] = grids_for_degree(f.degree(), gc);
  const NormEstimate est = duren_weight_integral(f, power, rg, cg);
  nlohmann::json j;
  j["power"] = power;
  j["value"] = est.value;
  j["grid"]["circle_points"] = est.grid.circle_points;
  j["grid"]["radial_nodes"] = est.grid.radial_nodes;
  j["grid"]["radial_levels"] = est.grid.radial_levels;
  const std::string rep = j.dump(2) + "\n";
  std::cout << rep;
  emit(resolve_out(out_flag, false), name + ".json", rep);
  return 0;
}

// ---- lacunary --------------------------------------------------------------

int cmd_lacunary(const std::string& input, const std::string& kind, const std::string& p_text,
                 double alpha, std::vector<std::int64_t> kdial, const std::string& out_flag,
                 const std::string& name) {
  const LacunarySpec spec = lacunary_from_json(slurp(input));
  const SpaceParams sp = make_space(kind, p_text, alpha);
  const auto total = static_cast<std::int64_t>(spec.terms());

  if (kdial.empty()) {
    // default dial: up to four halvings ending at the full spec
    for (std::int64_t k = total; k >= 1 && kdial.size() < 4; k /= 2) kdial.insert(kdial.begin(), k);
  }
  for (std::int64_t k : kdial) {
    if (k < 1 || k > total) throw std::runtime_error("--kdial entries must lie in [1, terms]");
  }

  std::vector<RefinementPoint> trace;
  for (std::int64_t k : kdial) {
    trace.push_back({k, lacunary_characteristic(spec.prefix(static_cast<std::size_t>(k)), sp)});
  }
  const Verdict v = classify_trace(trace);

  nlohmann::json j;
  j["space"] = sp.label();
  j["characteristic"] = trace.back().value;
  j["verdict"] = verdict_label(v);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& pt : trace) arr.push_back({{"k", pt.n}, {"value", pt.value}});
  j["trace"] = arr;
  const std::string rep = j.dump(2) + "\n";
  std::cout << rep;

  std::string csv = "quantity,space,n,value\n";
  for (const auto& pt : trace) {
    char row[96];
    std::snprintf(row, sizeof row, "membership,%s,%lld,%.12e\n", sp.label().c_str(),
                  static_cast<long long>(pt.n), pt.value);
    csv += row;
  }
  const std::string out_dir = resolve_out(out_flag, false);
  emit(out_dir, name + ".json", rep);
  emit(out_dir, name + ".csv", csv);
  return 0;
}

// ---- scenario --------------------------------------------------------------

int verdict_exit(RunVerdict v) {
  switch (v) {
    case RunVerdict::pass:
      return 0;
    case RunVerdict::fail:
      return 1;
    case RunVerdict::inconclusive:
      return 2;
  }
  return 1;
}

RunConfig load_run_config(const std::string& config_path, std::uint64_t seed, bool seed_set,
                          int scale, bool scale_set, const std::string& out_flag) {
  RunConfig cfg;
  std::string config_out;
  if (!config_path.empty()) {
    const auto j = nlohmann::json::parse(slurp(config_path), nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("config file is not valid JSON");
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("scale")) cfg.scale = j["scale"].get<int>();
    if (j.contains("out")) config_out = j["out"].get<std::string>();
  }
  if (seed_set) cfg.seed = seed;
  if (scale_set) cfg.scale = scale;
  cfg.out_dir = !out_flag.empty() ? resolve_out(out_flag, true)
                                  : (!config_out.empty() ? config_out : resolve_out("", true));
  return cfg;
}

int run_one(const Scenario& s, const RunConfig& cfg, bool verbose) {
  const RunRecord rec = run_scenario(s, cfg);
  emit(cfg.out_dir, rec.scenario + ".csv", run_record_csv(rec));
  emit(cfg.out_dir, rec.scenario + ".json", run_record_to_json(rec));
  std::printf("%-28s %-13s expected %-13s %6.2fs  (%zu rows)\n", rec.scenario.c_str(),
              run_verdict_label(rec.verdict).c_str(), s.expected.c_str(), rec.runtime_seconds,
              rec.rows.size());
  for (const std::string& note : rec.notes) {
    if (verbose || note.rfind("ok: ", 0) != 0) std::printf("    %s\n", note.c_str());
  }
  return verdict_exit(rec.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for analytic function spaces on the unit disc"};
  app.require_subcommand(1);

  // norm
  auto* norm = app.add_subcommand("norm", "norm estimate of a series in one space");
  std::string n_input, n_kind = "hardy", n_p = "2", n_out, n_name = "norm";
  double n_alpha = 0.0;
  GridChoice n_grid;
  std::vector<int> n_refine;
  norm->add_option("--input", n_input, "series JSON file")->required();
  norm->add_option("--space", n_kind,
                   "hardy|hinfty|bergman|dirichlet|bloch|logbloch|bmoa|bmoalog");
  norm->add_option("--p", n_p, "integral exponent, or 'inf'");
  norm->add_option("--alpha", n_alpha, "weight / log exponent");
  add_grid_flags(norm, n_grid);
  norm->add_option("--refine", n_refine, "two exponents j0 j1: trace truncations 2^j0..2^j1")
      ->expected(2);
  norm->add_option("--out", n_out, "output directory (default $DISCLAB_OUT)");
  norm->add_option("--name", n_name, "output file stem");

  // fournier
  auto* four = app.add_subcommand("fournier", "paired recursion with certificate");
  std::string f_input, f_out, f_name = "fournier";
  int f_harmonic = 0, f_samples = 4096;
  bool f_dense = false;
  four->add_option("--input", f_input, "recursion input JSON {u: [...], n: [...]}");
  four->add_option("--harmonic", f_harmonic, "build u_k = 1/(k+1), n_k = 4^k with K steps");
  four->add_option("--samples", f_samples, "circle samples for the certificate")
      ->check(CLI::PositiveNumber);
  four->add_flag("--dense", f_dense, "also dump dense coefficients (only when the top frequency fits)");
  four->add_option("--out", f_out, "output directory (default $DISCLAB_OUT)");
  four->add_option("--name", f_name, "output file stem");

  // random
  auto* rnd = app.add_subcommand("random", "sign sequences and sign-averaged statistics");
  rnd->require_subcommand(1);
  auto* kh = rnd->add_subcommand("khinchine", "moment ratio of a random sign sum");
  std::string k_coeffs, k_out, k_name = "khinchine";
  int k_equal = 0, k_draws = 1;
  double k_p = 2.0;
  std::int64_t k_trials = 0;
  std::uint64_t k_seed = 20240915ULL;
  kh->add_option("--coeffs", k_coeffs, "series JSON file providing the coefficients");
  kh->add_option("--equal", k_equal, "use K equal unit coefficients instead");
  kh->add_option("--p", k_p, "moment exponent");
  kh->add_option("--trials", k_trials, "Monte Carlo trials (0 = library default)");
  kh->add_option("--seed", k_seed, "base seed; draw i uses seed + i");
  kh->add_option("--draws", k_draws, "independent draws (CSV gets one row per draw)");
  kh->add_option("--out", k_out, "output directory (default $DISCLAB_OUT)");
  kh->add_option("--name", k_name, "output file stem");

  auto* sg = rnd->add_subcommand("signs", "one sign sequence, exact-t or seeded");
  std::size_t s_count = 64;
  double s_t = 0.0;
  std::uint64_t s_seed = 20240915ULL;
  std::string s_out, s_name = "signs";
  sg->add_option("--count", s_count, "how many signs");
  auto* s_t_opt = sg->add_option("--t", s_t, "sample exactly at this t in [0,1)");
  sg->add_option("--seed", s_seed, "seeded draw instead of exact t");
  sg->add_option("--out", s_out, "output directory (default $DISCLAB_OUT)");
  sg->add_option("--name", s_name, "output file stem");

  auto* du = rnd->add_subcommand("duren", "weighted radial integral of the squared derivative sup");
  std::string d_input, d_out, d_name = "duren";
  double d_power = 2.0;
  GridChoice d_grid;
  du->add_option("--input", d_input, "series JSON file")->required();
  du->add_option("--power", d_power, "log power in the radial weight");
  add_grid_flags(du, d_grid);
  du->add_option("--out", d_out, "output directory (default $DISCLAB_OUT)");
  du->add_option("--name", d_name, "output file stem");

  // lacunary
  auto* lac = app.add_subcommand("lacunary", "gap-series membership statistic with verdict");
  std::string l_input, l_kind = "dirichlet", l_p = "2", l_out, l_name = "lacunary";
  double l_alpha = 0.0;
  std::vector<std::int64_t> l_kdial;
  lac->add_option("--input", l_input, "gap spec JSON file")->required();
  lac->add_option("--space", l_kind,
                  "hardy|hinfty|bergman|dirichlet|bloch|logbloch|bmoa|bmoalog");
  lac->add_option("--p", l_p, "integral exponent, or 'inf'");
  lac->add_option("--alpha", l_alpha, "weight / log exponent");
  lac->add_option("--kdial", l_kdial, "prefix term counts for the refinement trace")
      ->delimiter(',');
  lac->add_option("--out", l_out, "output directory (default $DISCLAB_OUT)");
  lac->add_option("--name", l_name, "output file stem");

  // scenario
  auto* scn = app.add_subcommand("scenario", "scripted experiment catalog");
  scn->require_subcommand(1);
  auto* list = scn->add_subcommand("list", "names, expected verdicts, and claims");
  bool list_json = false;
  list->add_flag("--json", list_json, "machine-readable catalog");

  auto* run = scn->add_subcommand("run", "run one scenario (or --all) and write records");
  std::string r_name, r_config, r_out;
  bool r_all = false, r_verbose = false;
  std::uint64_t r_seed = 0;
  int r_scale = 0;
  run->add_option("name", r_name, "scenario name (see `scenario list`)");
  run->add_flag("--all", r_all, "run the whole catalog");
  run->add_option("--config", r_config, "JSON config {seed, scale, out}");
  auto* seed_opt = run->add_option("--seed", r_seed, "override the record seed");
  auto* scale_opt = run->add_option("--scale", r_scale, "precision dial: extra circle oversampling");
  run->add_option("--out", r_out, "output directory (default $DISCLAB_OUT, else .)");
  run->add_flag("--verbose", r_verbose, "print passing checks too, not just failures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm->parsed()) {
      return cmd_norm(n_input, n_kind, n_p, n_alpha, n_grid, n_refine, n_out, n_name);
    }
    if (four->parsed()) {
      return cmd_fournier(f_input, f_harmonic, f_samples, f_dense, f_out, f_name);
    }
    if (kh->parsed()) {
      return cmd_random_khinchine(k_coeffs, k_equal, k_p, k_trials, k_seed, k_draws, k_out, k_name);
    }
    if (sg->parsed()) {
      return cmd_random_signs(s_count, s_t, s_t_opt->count() > 0, s_seed, s_out, s_name);
    }
    if (du->parsed()) {
      return cmd_random_duren(d_input, d_power, d_grid, d_out, d_name);
    }
    if (lac->parsed()) {
      return cmd_lacunary(l_input, l_kind, l_p, l_alpha, l_kdial, l_out, l_name);
    }
    if (list->parsed()) {
      if (list_json) {
        std::cout << catalog_to_json();
      } else {
        for (const Scenario& s : scenario_catalog()) {
          std::printf("%-28s expected %-13s %s\n", s.name.c_str(), s.expected.c_str(),
                      s.claim.c_str());
        }
      }
      return 0;
    }
    if (run->parsed()) {
      const RunConfig cfg = load_run_config(r_config, r_seed, seed_opt->count() > 0, r_scale,
                                            scale_opt->count() > 0, r_out);
      if (r_all && !r_name.empty()) throw std::runtime_error("give a scenario name or --all, not both");
      if (!r_all && r_name.empty()) throw std::runtime_error("which scenario?  give a name or --all");
      if (!r_all) {
        const Scenario* s = find_scenario(r_name);
        if (!s) throw std::runtime_error("no scenario named '" + r_name + "' (see `scenario list`)");
        return run_one(*s, cfg, r_verbose);
      }
      int worst = 0;
      bool any_inconclusive = false;
      for (const Scenario& s : scenario_catalog()) {
        const int code = run_one(s, cfg, r_verbose);
        if (code == 1) worst = 1;
        if (code == 2) any_inconclusive = true;
      }
      return worst == 1 ? 1 : (any_inconclusive ? 2 : 0);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
