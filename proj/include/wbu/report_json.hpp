// JSON encodings of charts, verdicts, surface reports and classification
// reports.  Key order is fixed and serialization is byte-stable.
#pragma once

#include <string>

#include "json.hpp"

#include "wbu/classify.hpp"
#include "wbu/surface.hpp"

namespace wbu {

using ordered_json = nlohmann::ordered_json;

ordered_json charts_json(const GermModel& g, const WeightVector& w);
ordered_json verdict_json(const BlowupVerdict& v, const GermModel& g);
ordered_json surface_json(const SurfaceReport& r, const GermModel& g, const WeightVector& w);
ordered_json classification_json(const ClassificationReport& r,
                                 i64 min_discrepancy = 0, i64 max_discrepancy = -1);

// dump(2) plus trailing newline; the byte-stable form used by the CLI.
std::string to_stable_string(const ordered_json& j);

} // namespace wbu
