#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

namespace disclab {

// one measured quantity at one refinement step of an experiment
struct TraceRow {
  std::string quantity;
  std::string space;  // norm/space label, empty when not space specific
  std::int64_t n = 0;  // refinement dial: truncation degree, gap-term count, or draw index
  double value = 0.0;
};

enum class RunVerdict { pass, fail, inconclusive };
std::string run_verdict_label(RunVerdict v);

struct RunConfig {
  std::uint64_t seed = 20240915ULL;
  int scale = 0;       // 0 = scenario default; >0 shifts the top refinement level (capped per scenario)
  std::string out_dir; // artifact directory; empty = no files written by the runner
};

struct RunRecord {
  std::string scenario;
  std::uint64_t config_hash = 0;
  std::vector<TraceRow> rows;
  std::vector<std::string> notes;  // one line per individual check, "ok: ..." / "FAIL: ..."
  RunVerdict verdict = RunVerdict::inconclusive;
  double runtime_seconds = 0.0;  // excluded from the CSV so reruns stay byte-identical
};

struct Scenario {
  std::string name;
  std::string claim;     // the mathematical statement the experiment probes
  std::string expected;  // verdict label the experiment is designed to reach
  std::function<RunRecord(const RunConfig&)> run;
};

const std::vector<Scenario>& scenario_catalog();
const Scenario* find_scenario(const std::string& name);
RunRecord run_scenario(const Scenario& s, const RunConfig& cfg);

std::uint64_t config_hash(const std::string& scenario_name, const RunConfig& cfg);
// CSV bytes for a record: header "scenario,quantity,space,n,value" then one row
// per trace entry with value formatted as %.12e; no timestamps or runtimes.
std::string run_record_csv(const RunRecord& rec);

// finite-family multiplier diagnostics: norms of f in X and of S_N(f*g) in Y
// across doubling truncations, with a growth verdict per family member
struct LabeledSeries {
  std::string label;
  CoeffSeries f;
};

struct MultiplierRow {
  std::string f_label;
  double f_norm_x = 0.0;
  double fg_norm_y = 0.0;  // at the top truncation
  double ratio = 0.0;      // fg_norm_y / max(f_norm_x, tiny)
  Verdict fg_trend = Verdict::inconclusive;
};

struct MultiplierTable {
  std::string g_label;
  SpaceParams x;
  SpaceParams y;
  std::vector<MultiplierRow> rows;
  double max_ratio = 0.0;
};

MultiplierTable multiplier_report(const CoeffSeries& g, const std::vector<LabeledSeries>& family,
                                  const SpaceParams& x, const SpaceParams& y,
                                  const std::vector<int>& truncation_exponents);

}  // namespace disclab
