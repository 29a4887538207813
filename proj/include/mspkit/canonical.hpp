#pragma once

#include <string>

#include "mspkit/graph.hpp"

namespace mspkit {

// Canonical certificate for decorated graphs: two graphs are isomorphic as
// decorated graphs (decorations, labeled markings, edge multiplicities and
// stacky indices all preserved) iff their certificates are equal.  Exhaustive
// search over color-respecting orderings after iterated refinement; fine for
// the graph sizes that occur here.
std::string certificate(const decorated_graph& g);

}  // namespace mspkit
