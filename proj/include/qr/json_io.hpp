#pragma once

#include <json.hpp>
#include <string>

#include "qr/filters.hpp"
#include "qr/qintegral.hpp"
#include "qr/qmeasure.hpp"

namespace qr {

using Json = nlohmann::json;

// {"n": 3, "values": {"{}": "0", "{1}": "5", ...}}  (all 2^n events), or the
// partial form {"n": 3, "singletons": {"1": ...}, "pairs": {"{1,2}": ...}}
// which goes through the grade-2 extension. Rationals are "p" or "p/q" strings.
// from_json validates and throws ParseError / MeasureError.
Json measure_to_json(const QMeasure& m);
QMeasure measure_from_json(const Json& j);

// {"f": {"1": "5", ...}}; n is inferred, keys 1..n must all be present.
Json density1_to_json(const Density1& f);
Density1 density1_from_json(const Json& j);

// {"f2": {"(1,1)": "5", "(1,2)": "1", ...}}; unordered keys accepted, a pair
// given twice (e.g. "(2,1)" next to "(1,2)") is rejected, all pairs required.
Json density2_to_json(const Density2& f);
Density2 density2_from_json(const Json& j);

// {"mode", "outcome", "density", "measure", "trace", "branches_explored"} plus
// the self-describing fields n / coevent / existential / schema_version.
Json verdict_to_json(const FilterVerdict& v);
FilterVerdict verdict_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace qr
