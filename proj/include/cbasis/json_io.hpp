#pragma once

#include <json.hpp>

#include "cbasis/blocks.hpp"
#include "cbasis/crystal.hpp"
#include "cbasis/laurent.hpp"
#include "cbasis/orders.hpp"
#include "cbasis/tensor.hpp"

namespace cbasis {

using Json = nlohmann::ordered_json;

/// {"7":"1","5":"4"}: exponent -> coefficient, decreasing exponents.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const Tuple& b);
Json to_json(const Space& space);
/// {"space":"typeC","n":2,"terms":[{"b":[1,0],"poly":{"0":"1"}}]}; type A adds "sigma".
Json to_json(const TensorVec& v);
TensorVec tensor_from_json(const Json& j);

/// {"non_wedge":{"2":"v"},"n":2}
Json to_json(const ArcDiagram& d);
ArcDiagram arc_from_json(const Json& j);

/// tuple -> {operator: tuple}, keys rendered as "a,b,c".
Json to_json(const ComponentReport& report);

}  // namespace cbasis
