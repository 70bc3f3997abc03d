#pragma once

#include <string>

#include "disclab/fournier.hpp"
#include "disclab/random_series.hpp"
#include "disclab/scenarios.hpp"
#include "disclab/series.hpp"
#include "disclab/spaces.hpp"

// External JSON formats.  Everything here takes or returns std::string so the
// JSON implementation stays an internal detail of the library.
//
//   series:    {"degree": d, "re": [...], "im": [...]}
//   lacunary:  {"indices": [...], "re": [...], "im": [...], "lambda": q}
//   space:     {"kind": "hardy|bergman|dirichlet|bloch|logbloch|bmoa|bmoalog",
//               "p": number | "inf", "alpha": number}
//   recursion input: {"u": [x | [re, im], ...], "n": [...]}
//
// Parsers throw std::invalid_argument with a readable message on malformed
// input.  Emitted JSON has sorted keys, so identical data gives identical
// bytes.

namespace disclab {

std::string series_to_json(const CoeffSeries& f);
CoeffSeries series_from_json(const std::string& text);

std::string lacunary_to_json(const LacunarySpec& s);
LacunarySpec lacunary_from_json(const std::string& text);

std::string space_to_json(const SpaceParams& sp);
SpaceParams space_from_json(const std::string& text);

/// Estimate bundle: space, value, overflow flag, refinement verdict, grid
/// sizes, and the refinement trace when one was recorded.
std::string norm_report_json(const SpaceParams& sp, const NormEstimate& est);

std::string fournier_input_to_json(const FournierInput& in);
FournierInput fournier_input_from_json(const std::string& text);
std::string certificate_to_json(const FournierCertificate& cert);

std::string khinchine_to_json(const KhinchineReport& rep);
std::string signs_to_json(const SignSequence& s);

/// The scenario catalog as [{"name", "claim", "expected"}, ...].
std::string catalog_to_json();
/// Full run record including notes and runtime (the CSV twin omits runtime).
std::string run_record_to_json(const RunRecord& rec);

}  // namespace disclab
