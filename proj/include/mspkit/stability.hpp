#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspkit/graph.hpp"

namespace mspkit {

enum class instability_case : std::uint8_t { case1, case2_trivial, case2_rho, case3, case4 };
const char* instability_case_name(instability_case c);

// A vertex (or whole-curve) configuration that forces an infinite
// automorphism group, at the degree level.
struct instability_witness {
    std::optional<int> vertex_id;  // absent for the whole-curve cases 3 and 4
    instability_case kind;

    friend bool operator==(const instability_witness&, const instability_witness&) = default;
};

struct stability_report {
    std::vector<instability_witness> witnesses;
    std::vector<std::string> warnings;

    bool stable() const { return witnesses.empty(); }
};

// Degree-level instability classification.  Cases needing a sheaf isomorphism
// are decided generically from degree 0 (degree-level verdict).  Sorted by
// (vertex id, case); whole-curve witnesses sort first.
stability_report find_witnesses(const decorated_graph& g, const numerical_data& data);

bool is_stable(const decorated_graph& g, const numerical_data& data);

// Normalizes at every edge and requires stability of each piece.
bool split_stability(const decorated_graph& g, const numerical_data& data);

}  // namespace mspkit
