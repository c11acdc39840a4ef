#pragma once

#include "vpcremona/cremona.hpp"
#include "vpcremona/sarkisov.hpp"
#include "vpcremona/threefold.hpp"

#include "json.hpp"

namespace vpcremona {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
// Accepts "n/d" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json poly_to_json(const HomPoly& p);
// Accepts the object form or an expression string in `nvars` variables.
HomPoly hompoly_from_json(const Json& j, int nvars);

Json point_to_json(const ProjPoint& p);
ProjPoint projpoint_from_json(const Json& j);

Json map_to_json(const CremonaMap& f);
// Accepts {"deg", "components"} or an array of three polynomials.
CremonaMap map_from_json(const Json& j);

Json curve_to_json(const WeierstrassCurve& c);
WeierstrassCurve curve_from_json(const Json& j);
Json curve_point_to_json(const CurvePoint& p);
CurvePoint curve_point_from_json(const Json& j);

Json model_to_json(const SurfaceModel& m);
SurfaceModel model_from_json(const Json& j);

Json type_to_json(const HomaloidalType& t);
HomaloidalType type_from_json(const Json& j);

Json forest_to_json(const BubbleForest& f);
BubbleForest forest_from_json(const Json& j);

Json link_to_json(const SarkisovLink& l);
SarkisovLink link_from_json(const Json& j);

Json quartic_to_json(const QuarticData& q);
QuarticData quartic_from_json(const Json& j);

}  // namespace vpcremona
