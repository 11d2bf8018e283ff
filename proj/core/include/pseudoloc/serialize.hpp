#pragma once

#include <nlohmann/json.hpp>

#include "pseudoloc/closed_form.hpp"
#include "pseudoloc/structure.hpp"

namespace pseudoloc {

using Json = nlohmann::ordered_json;

// Counts first, then sorted vertex lists; key order is fixed.
Json to_json(const PseudotreeProfile& p);
Json to_json(const StrongResolvingGraph& sr);

// {param, [k], value | [lo, hi], [witness], method, theorem_tag}
Json to_json(const ParameterResult& r, Parameter param, int k = 0);
Json to_json(const ParameterResult& r);

}  // namespace pseudoloc
