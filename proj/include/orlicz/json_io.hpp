#pragma once

#include <json.hpp>

#include "orlicz/averages.hpp"
#include "orlicz/constructions.hpp"
#include "orlicz/embedding.hpp"
#include "orlicz/equivalence.hpp"
#include "orlicz/musielak.hpp"
#include "orlicz/weight_matrix.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

/// {"kind": "power", "p", "scale"} or {"kind": "pwa", "knots", "values",
/// "ext_slope"}; bounded-domain functions carry "domain_bound" in place of
/// "ext_slope".
Json to_json(const OrliczFunction& m);
OrliczFunction orlicz_from_json(const Json& j);

/// {"n": int, "functions": [...]}
Json to_json(const MusielakSystem& system);
MusielakSystem system_from_json(const Json& j);

/// {"n": int, "N": int, "rows": [[...], ...]}
Json to_json(const WeightMatrix& a);
WeightMatrix matrix_from_json(const Json& j);

/// {"mode", "value", "samples", "stderr"}
Json to_json(const AverageResult& r);
Json to_json(const EquivalenceReport& r, bool with_ratios = false);
Json to_json(const DistortionReport& r, bool with_ratios = false);
Json to_json(const ConstructionConfig& c);

}  // namespace orlicz
