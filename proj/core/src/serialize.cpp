#include "disclab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace disclab {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": not valid JSON");
  return j;
}

const json& field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

std::vector<double> double_array(const json& j, const char* key, const char* what) {
  const json& a = field(j, key, what);
  if (!a.is_array()) throw std::invalid_argument(std::string(what) + ": '" + key + "' must be an array");
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number()) throw std::invalid_argument(std::string(what) + ": '" + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

json coeff_object(std::span<const cplx> c) {
  json re = json::array(), im = json::array();
  for (const cplx& v : c) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  json j;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::vector<cplx> coeffs_from(const json& j, const char* what) {
  const std::vector<double> re = double_array(j, "re", what);
  std::vector<double> im;
  if (j.contains("im")) {
    im = double_array(j, "im", what);
    if (im.size() != re.size())
      throw std::invalid_argument(std::string(what) + ": 're' and 'im' lengths differ");
  } else {
    im.assign(re.size(), 0.0);
  }
  std::vector<cplx> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = cplx(re[i], im[i]);
  return out;
}

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::hardy:
      return "hardy";
    case SpaceKind::bergman:
      return "bergman";
    case SpaceKind::dirichlet_type:
      return "dirichlet";
    case SpaceKind::bloch:
      return "bloch";
    case SpaceKind::log_bloch:
      return "logbloch";
    case SpaceKind::bmoa:
      return "bmoa";
    case SpaceKind::bmoa_log:
      return "bmoalog";
  }
  return "?";
}

json space_json(const SpaceParams& sp) {
  json j;
  j["kind"] = kind_name(sp.kind);
  if (std::isinf(sp.p)) {
    j["p"] = "inf";
  } else {
    j["p"] = sp.p;
  }
  j["alpha"] = sp.alpha;
  return j;
}

SpaceParams space_from(const json& j) {
  const char* what = "space";
  const std::string kind = field(j, "kind", what).get<std::string>();
  double p = 2.0;
  if (j.contains("p")) {
    const json& pj = j["p"];
    if (pj.is_string()) {
      if (pj.get<std::string>() != "inf") throw std::invalid_argument("space: 'p' string must be \"inf\"");
      p = std::numeric_limits<double>::infinity();
    } else if (pj.is_number()) {
      p = pj.get<double>();
    } else {
      throw std::invalid_argument("space: 'p' must be a number or \"inf\"");
    }
  }
  const double alpha = j.contains("alpha") ? field(j, "alpha", what).get<double>() : 0.0;

  if (kind == "hardy") return std::isinf(p) ? SpaceParams::hinfty() : SpaceParams::hardy(p);
  if (kind == "hinfty") return SpaceParams::hinfty();
  if (kind == "bergman") return SpaceParams::bergman(p, alpha);
  if (kind == "dirichlet") return SpaceParams::dirichlet(p, alpha);
  if (kind == "bloch") return SpaceParams::bloch();
  if (kind == "logbloch") return SpaceParams::log_bloch(alpha);
  if (kind == "bmoa") return SpaceParams::bmoa();
  if (kind == "bmoalog") return SpaceParams::bmoa_log();
  throw std::invalid_argument("space: unknown kind '" + kind + "'");
}

json trace_json(const std::vector<RefinementPoint>& trace) {
  json arr = json::array();
  for (const RefinementPoint& p : trace) {
    json e;
    e["n"] = p.n;
    e["value"] = p.value;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string hex64(std::uint64_t v) {
  char b[20];
  std::snprintf(b, sizeof b, "%016llx", static_cast<unsigned long long>(v));
  return b;
}

}  // namespace

std::string series_to_json(const CoeffSeries& f) {
  json j = coeff_object(f.coeffs());
  j["degree"] = f.degree();
  return dump(j);
}

CoeffSeries series_from_json(const std::string& text) {
  const json j = parse(text, "series");
  std::vector<cplx> c = coeffs_from(j, "series");
  if (c.empty()) throw std::invalid_argument("series: no coefficients");
  if (j.contains("degree")) {
    const auto d = field(j, "degree", "series").get<std::int64_t>();
    if (d + 1 != static_cast<std::int64_t>(c.size()))
      throw std::invalid_argument("series: 'degree' disagrees with coefficient count");
  }
  return CoeffSeries(std::move(c));
}

std::string lacunary_to_json(const LacunarySpec& s) {
  json j = coeff_object(s.coeffs());
  j["indices"] = s.indices();
  j["lambda"] = s.ratio();
  return dump(j);
}

LacunarySpec lacunary_from_json(const std::string& text) {
  const json j = parse(text, "lacunary");
  const json& idx = field(j, "indices", "lacunary");
  if (!idx.is_array()) throw std::invalid_argument("lacunary: 'indices' must be an array");
  std::vector<std::int64_t> indices;
  for (const auto& v : idx) {
    if (!v.is_number_integer()) throw std::invalid_argument("lacunary: indices must be integers");
    indices.push_back(v.get<std::int64_t>());
  }
  std::vector<cplx> coeffs = coeffs_from(j, "lacunary");
  if (coeffs.size() != indices.size())
    throw std::invalid_argument("lacunary: coefficient and index counts differ");
  const double lambda = j.contains("lambda") ? field(j, "lambda", "lacunary").get<double>() : 2.0;
  return LacunarySpec(std::move(indices), std::move(coeffs), lambda);
}

std::string space_to_json(const SpaceParams& sp) { return dump(space_json(sp)); }

SpaceParams space_from_json(const std::string& text) {
  return space_from(parse(text, "space"));
}

std::string norm_report_json(const SpaceParams& sp, const NormEstimate& est) {
  json j;
  j["space"] = space_json(sp);
  j["label"] = sp.label();
  j["value"] = est.value;
  j["flag"] = est.diverging ? "diverging" : "finite";
  Verdict v = classify_trace(est.trace);
  if (est.diverging) v = Verdict::diverging;
  j["verdict"] = verdict_label(v);
  j["truncation_degree"] = est.truncation_degree;
  json g;
  g["circle_points"] = est.grid.circle_points;
  g["radial_nodes"] = est.grid.radial_nodes;
  g["radial_levels"] = est.grid.radial_levels;
  g["max_box_level"] = est.grid.max_box_level;
  j["grid"] = std::move(g);
  j["refinement_trace"] = trace_json(est.trace);
  return dump(j);
}

std::string fournier_input_to_json(const FournierInput& in) {
  json u = json::array();
  for (const cplx& v : in.u) u.push_back(json::array({v.real(), v.imag()}));
  json j;
  j["u"] = std::move(u);
  j["n"] = in.n;
  return dump(j);
}

FournierInput fournier_input_from_json(const std::string& text) {
  const json j = parse(text, "recursion input");
  const json& uj = field(j, "u", "recursion input");
  if (!uj.is_array()) throw std::invalid_argument("recursion input: 'u' must be an array");
  std::vector<cplx> u;
  for (const auto& v : uj) {
    if (v.is_number()) {
      u.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      u.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw std::invalid_argument("recursion input: 'u' entries must be numbers or [re, im] pairs");
    }
  }
  const json& nj = field(j, "n", "recursion input");
  if (!nj.is_array()) throw std::invalid_argument("recursion input: 'n' must be an array");
  std::vector<std::int64_t> n;
  for (const auto& v : nj) {
    if (!v.is_number_integer()) throw std::invalid_argument("recursion input: 'n' entries must be integers");
    n.push_back(v.get<std::int64_t>());
  }
  return FournierInput(std::move(u), std::move(n));
}

std::string certificate_to_json(const FournierCertificate& cert) {
  json blocks = json::array();
  for (const BlockBound& b : cert.blocks) {
    json e;
    e["k"] = b.k;
    e["sup_estimate"] = b.sup_estimate;
    e["bound"] = b.bound;
    blocks.push_back(std::move(e));
  }
  json j;
  j["max_coeff_error"] = cert.max_coeff_error;
  j["identity_residual"] = cert.identity_residual;
  j["lambda_support_ok"] = cert.lambda_support_ok;
  j["samples"] = cert.samples;
  j["blocks"] = std::move(blocks);
  return dump(j);
}

std::string khinchine_to_json(const KhinchineReport& rep) {
  json j;
  j["p"] = rep.p;
  j["ratio"] = rep.ratio;
  j["trials"] = rep.trials;
  j["method"] = rep.method == KhinchineReport::Method::exhaustive ? "exhaustive" : "monte-carlo";
  return dump(j);
}

std::string signs_to_json(const SignSequence& s) {
  json j;
  j["signs"] = s.signs;
  j["dyadic_breakpoint"] = s.dyadic_breakpoint;
  if (s.seeded) {
    j["seed"] = s.seed;
  } else {
    j["t"] = s.t;
  }
  return dump(j);
}

std::string catalog_to_json() {
  json arr = json::array();
  for (const Scenario& s : scenario_catalog()) {
    json e;
    e["name"] = s.name;
    e["claim"] = s.claim;
    e["expected"] = s.expected;
    arr.push_back(std::move(e));
  }
  return dump(arr);
}

std::string run_record_to_json(const RunRecord& rec) {
  json rows = json::array();
  for (const TraceRow& r : rec.rows) {
    json e;
    e["quantity"] = r.quantity;
    e["space"] = r.space;
    e["n"] = r.n;
    e["value"] = r.value;
    rows.push_back(std::move(e));
  }
  json j;
  j["scenario"] = rec.scenario;
  j["config_hash"] = hex64(rec.config_hash);
  j["verdict"] = run_verdict_label(rec.verdict);
  j["notes"] = rec.notes;
  j["rows"] = std::move(rows);
  j["runtime_seconds"] = rec.runtime_seconds;
  return dump(j);
}

}  // namespace disclab
