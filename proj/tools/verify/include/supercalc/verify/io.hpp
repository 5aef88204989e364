#pragma once

// JSON forms of the exact values. Scalars are objects keyed by the pi^{s/2}
// exponent with exact "a/b + c/d i" strings; Elements are term arrays with
// 1-based variable and generator indices.

#include <json.hpp>

#include "supercalc/distributions.hpp"
#include "supercalc/harmonics.hpp"
#include "supercalc/superalgebra.hpp"
#include "supercalc/transforms.hpp"

namespace supercalc::verify {

using nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const SuperMonomial& mono, const SpaceSignature& space);
json to_json(const Element& e);
Element element_from_json(const json& j, const SpaceSignature& space);

json to_json(const SpaceSignature& space);
json to_json(const RadialDistribution& d);
json to_json(const GradedBasis& basis);
json to_json(const UniquenessReport& report);
json to_json(const RadonValue& value);

}  // namespace supercalc::verify
