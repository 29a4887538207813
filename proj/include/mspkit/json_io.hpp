#pragma once

#include <nlohmann/json.hpp>

#include "mspkit/basket.hpp"
#include "mspkit/enumerate.hpp"
#include "mspkit/graph.hpp"
#include "mspkit/numerical.hpp"
#include "mspkit/stability.hpp"
#include "mspkit/state_space.hpp"

// UTF-8 JSON round-trips for every exposed type.  nlohmann::json keeps object
// keys sorted, so dumps are byte-deterministic; all numbers are exact
// (integers, fifths, or "p/q" strings -- never floats).
namespace mspkit {

using json = nlohmann::json;

json to_json(fifths f);
fifths fifths_from_json(const json& j);

json to_json(monodromy m);
monodromy monodromy_from_json(const json& j);

json to_json(const numerical_data& d);
numerical_data numerical_from_json(const json& j);

json to_json(const decorated_graph& g);
decorated_graph graph_from_json(const json& j);

json to_json(const validation_report& r);
json to_json(const stability_report& r);

json to_json(const state_class& x);
state_class state_from_json(const json& j);

json to_json(const surface_model& s);
surface_model surface_from_json(const json& j);

json to_json(const pre_basket& pb);
pre_basket pre_basket_from_json(const json& j);

json to_json(const reduction_trace& t);
reduction_trace trace_from_json(const json& j);

json to_json(const canonical_graph& g, bool emit_aux);

degeneration_desc degeneration_from_json(const json& j);

}  // namespace mspkit
