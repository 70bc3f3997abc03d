#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "disclab/scenarios.hpp"
#include "disclab/serialize.hpp"
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

}  // namespace

TEST_CASE("the catalog is populated, unique and findable") {
  const auto& cat = scenario_catalog();
  CHECK(cat.size() >= 10);
  std::set<std::string> names;
  for (const Scenario& s : cat) {
    CHECK_FALSE(s.name.empty());
    CHECK_FALSE(s.claim.empty());
    CHECK((s.expected == "pass" || s.expected == "inconclusive"));
    CHECK(bool(s.run));
    names.insert(s.name);
  }
  CHECK(names.size() == cat.size());
  CHECK(find_scenario(*names.begin()) != nullptr);
  CHECK(find_scenario("no-such-experiment") == nullptr);
}

TEST_CASE("a light experiment runs to its designed verdict") {
  const Scenario* s = find_scenario("khinchine-bracket");
  REQUIRE(s != nullptr);
  RunConfig cfg;  // defaults; out_dir empty so nothing is written
  const RunRecord rec = run_scenario(*s, cfg);
  CHECK(rec.scenario == "khinchine-bracket");
  CHECK(rec.verdict == RunVerdict::pass);
  CHECK(rec.config_hash == config_hash("khinchine-bracket", cfg));
  CHECK(rec.runtime_seconds >= 0.0);
  CHECK_FALSE(rec.rows.empty());
  REQUIRE_FALSE(rec.notes.empty());
  for (const std::string& n : rec.notes) {
    CHECK(n.rfind("FAIL:", 0) != 0);  // a passing run carries no failing check lines
  }
}

TEST_CASE("csv output is headed, complete and deterministic") {
  const Scenario* s = find_scenario("khinchine-bracket");
  REQUIRE(s != nullptr);
  RunConfig cfg;
  const RunRecord a = run_scenario(*s, cfg);
  const RunRecord b = run_scenario(*s, cfg);
  const std::string csv_a = run_record_csv(a);
  const std::string csv_b = run_record_csv(b);
  CHECK(csv_a == csv_b);  // byte-identical reruns, runtime excluded on purpose

  CHECK(csv_a.rfind("scenario,quantity,space,n,value\n", 0) == 0);
  const std::size_t lines = static_cast<std::size_t>(std::count(csv_a.begin(), csv_a.end(), '\n'));
  CHECK(lines == a.rows.size() + 1);
  CHECK(csv_a.find("khinchine-bracket,") != std::string::npos);
  // every data field stays comma-free so each row has exactly four commas
  for (const TraceRow& r : a.rows) {
    CHECK(r.quantity.find(',') == std::string::npos);
    CHECK(r.space.find(',') == std::string::npos);
  }
}

TEST_CASE("config hashes separate name, seed and scale") {
  RunConfig cfg;
  const std::uint64_t base = config_hash("a", cfg);
  CHECK(base == config_hash("a", cfg));
  CHECK(base != config_hash("b", cfg));
  RunConfig cfg2 = cfg;
  cfg2.seed += 1;
  CHECK(base != config_hash("a", cfg2));
  RunConfig cfg3 = cfg;
  cfg3.scale = 1;
  CHECK(base != config_hash("a", cfg3));
  RunConfig cfg4 = cfg;
  cfg4.out_dir = "/elsewhere";  // output location is not part of the experiment identity
  CHECK(base == config_hash("a", cfg4));
}

TEST_CASE("series survive a json round trip bit for bit") {
  const CoeffSeries f = random_series(12, 5);
  const CoeffSeries g = series_from_json(series_to_json(f));
  REQUIRE(g.degree() == f.degree());
  for (std::int64_t n = 0; n <= f.degree(); ++n) CHECK(g.coeff(n) == f.coeff(n));

  // im is optional on input
  const CoeffSeries real = series_from_json(R"({"re": [1.0, 0.5]})");
  CHECK(real.degree() == 1);
  CHECK(real.coeff(1) == cplx{0.5, 0.0});
}

TEST_CASE("gap specs survive a json round trip") {
  const LacunarySpec s({2, 4, 8}, {{1.0, 0.0}, {0.0, -0.5}, {0.25, 0.25}}, 2.0);
  const LacunarySpec t = lacunary_from_json(lacunary_to_json(s));
  CHECK(t.indices() == s.indices());
  CHECK(t.ratio() == s.ratio());
  REQUIRE(t.terms() == s.terms());
  for (std::size_t k = 0; k < s.terms(); ++k) CHECK(t.coeffs()[k] == s.coeffs()[k]);

  // lambda defaults to the dyadic gap when omitted
  const LacunarySpec d = lacunary_from_json(R"({"indices": [1, 2, 4], "re": [1, 1, 1]})");
  CHECK(d.ratio() == 2.0);
}

TEST_CASE("space descriptors cover every kind including the sup row") {
  const std::vector<SpaceParams> all = {
      SpaceParams::hardy(2.0),          SpaceParams::hinfty(),
      SpaceParams::bergman(2.0, 0.5),   SpaceParams::dirichlet(0.5, -0.5),
      SpaceParams::bloch(),             SpaceParams::log_bloch(0.75),
      SpaceParams::bmoa(),              SpaceParams::bmoa_log()};
  for (const SpaceParams& sp : all) {
    const SpaceParams back = space_from_json(space_to_json(sp));
    CAPTURE(sp.label());
    CHECK(back.kind == sp.kind);
    CHECK(back.alpha == sp.alpha);
    if (std::isinf(sp.p)) {
      CHECK(std::isinf(back.p));
    } else {
      CHECK(back.p == sp.p);
    }
    CHECK(back.label() == sp.label());
  }
}

TEST_CASE("recursion inputs round trip with mixed entry forms") {
  const FournierInput in({{0.5, 0.0}, {0.25, -0.125}}, {1, 3});
  const FournierInput back = fournier_input_from_json(fournier_input_to_json(in));
  CHECK(back.n == in.n);
  REQUIRE(back.u.size() == in.u.size());
  for (std::size_t k = 0; k < in.u.size(); ++k) CHECK(back.u[k] == in.u[k]);

  // scalars mean real coefficients; pairs mean re/im
  const FournierInput mixed = fournier_input_from_json(R"({"u": [1.0, [0.5, 0.5]], "n": [1, 3]})");
  CHECK(mixed.u[0] == cplx{1.0, 0.0});
  CHECK(mixed.u[1] == cplx{0.5, 0.5});
}

TEST_CASE("parsers reject malformed documents with readable errors") {
  CHECK_THROWS_AS(series_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"im": [1.0]})"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"degree": 3, "re": [1.0], "im": [0.0]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(R"({"kind": "sobolev"})"), std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(R"({"kind": "hardy", "p": "huge"})"), std::invalid_argument);
  CHECK_THROWS_AS(lacunary_from_json(R"({"indices": [2, 3], "re": [1, 1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(fournier_input_from_json(R"({"u": [1, 1], "n": [1, 2]})"),
                  std::invalid_argument);
}

TEST_CASE("norm reports carry the estimate, grid and trail") {
  const NormEstimate est = refinement_study(
      [](std::int64_t n) { return 1.0 + 1.0 / static_cast<double>(n); },
      std::vector<std::int64_t>{8, 16, 32, 64});
  const std::string doc = norm_report_json(SpaceParams::dirichlet(2.0, 1.0), est);
  for (const char* key : {"\"space\"", "\"value\"", "\"verdict\"", "\"grid\"",
                          "\"refinement_trace\"", "\"truncation_degree\"", "\"flag\""}) {
    CAPTURE(key);
    CHECK(doc.find(key) != std::string::npos);
  }
  CHECK(doc.find("\"bounded\"") != std::string::npos);
  CHECK(doc.find("\"finite\"") != std::string::npos);
}

TEST_CASE("full run records serialize with a fixed-width hash") {
  RunRecord rec;
  rec.scenario = "demo";
  rec.config_hash = 0xabcull;
  rec.rows.push_back({"q", "s", 4, 1.5});
  rec.notes.push_back("ok: demo");
  rec.verdict = RunVerdict::pass;
  const std::string doc = run_record_to_json(rec);
  CHECK(doc.find("\"0000000000000abc\"") != std::string::npos);  // 16 hex digits, zero padded
  CHECK(doc.find("\"scenario\"") != std::string::npos);
  CHECK(doc.find("\"pass\"") != std::string::npos);
  CHECK(doc.find("\"notes\"") != std::string::npos);

  const std::string cat = catalog_to_json();
  CHECK(cat.find("\"name\"") != std::string::npos);
  CHECK(cat.find("\"expected\"") != std::string::npos);
  CHECK(cat.find("khinchine-bracket") != std::string::npos);
}

TEST_CASE("multiplying by one leaves every implemented estimate fixed") {
  // family member degree equals the top truncation, so source and target
  // norms are computed on identical grids and must agree to the bit
  const CoeffSeries one(std::vector<cplx>{{1.0, 0.0}});
  const std::vector<int> exps = {3, 4, 5, 6};
  const std::vector<LabeledSeries> family = {{"f64", random_series(64, 31)}};
  const std::vector<SpaceParams> kinds = {
      SpaceParams::hardy(2.0),        SpaceParams::hinfty(),
      SpaceParams::bergman(2.0, 0.5), SpaceParams::dirichlet(2.0, 1.0),
      SpaceParams::dirichlet(0.5, -0.5), SpaceParams::bloch(),
      SpaceParams::log_bloch(1.0),    SpaceParams::bmoa(),
      SpaceParams::bmoa_log()};
  for (const SpaceParams& sp : kinds) {
    const MultiplierTable tab = multiplier_report(one, family, sp, sp, exps);
    CAPTURE(sp.label());
    REQUIRE(tab.rows.size() == 1);
    CHECK(tab.rows[0].f_norm_x > 0.0);
    CHECK(tab.rows[0].ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tab.max_ratio == tab.rows[0].ratio);
    CHECK(tab.g_label == "symbol[deg=0]");
  }
}

TEST_CASE("the multiplier table validates its inputs") {
  const CoeffSeries one(std::vector<cplx>{{1.0, 0.0}});
  const std::vector<LabeledSeries> family = {{"f", random_series(8, 1)}};
  const SpaceParams h2 = SpaceParams::hardy(2.0);
  CHECK_THROWS_AS(multiplier_report(CoeffSeries{}, family, h2, h2, {3, 4, 5, 6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplier_report(one, {}, h2, h2, {3, 4, 5, 6}), std::invalid_argument);
  CHECK_THROWS_AS(multiplier_report(one, family, h2, h2, {3, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(multiplier_report(one, family, h2, h2, {3, 4, 4, 5}), std::invalid_argument);
}
