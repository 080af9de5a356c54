#pragma once

#include <json.hpp>

#include "richardson/classify.hpp"
#include "richardson/verify.hpp"

namespace richardson {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const DimensionVector& d);
json to_json(const LieElement& x);
json to_json(const LineDiagram& dg);
json to_json(const SupportSet& s);
json to_json(const TypeLabel& t);
/// Full report; carries the top-level "schema": 1 marker.
json to_json(const RichardsonReport& r);
json to_json(const ShapeDecomposition& sd);
json to_json(const CrossValidateReport& r);

}  // namespace richardson
