#pragma once

#include <string>

#include "json.hpp"

#include "ubeta/checks.hpp"

namespace ubeta {

using OrderedJson = nlohmann::ordered_json;

// Full analysis as JSON. Key order is part of the format: digits,
// classification, horizon, c, delta_c, p, closed_forms, verdicts, timings.
// Timings are emitted as integer microseconds only when with_timings is set,
// otherwise the key holds null so reports stay byte-identical across runs.
OrderedJson analysis_json(const AnalysisResult& r, bool with_timings = false);

// Same data as CSV, one row per n up to the horizon:
//   n,c,delta_c,delta2_c,p,p_closed,delta_c_closed
// Cells a column does not define at that n are left empty.
std::string analysis_csv(const AnalysisResult& r);

// Failing verdicts only, for machine consumption on a verification failure.
OrderedJson counterexample_json(const AnalysisResult& r);

std::string render_json(const OrderedJson& j);

}  // namespace ubeta
