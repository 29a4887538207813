#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mspkit/fifths.hpp"
#include "mspkit/monodromy.hpp"
#include "mspkit/numerical.hpp"

namespace mspkit {

// Level of a fiber component: which of C_0, C_01, C_1, C_1inf, C_inf it lies
// in.  The order is only used for canonical sorting.
enum class level : std::uint8_t { l0, l01, l1, l1inf, linf };

inline const char* level_name(level l) {
    switch (l) {
        case level::l0: return "0";
        case level::l01: return "01";
        case level::l1: return "1";
        case level::l1inf: return "1inf";
        case level::linf: return "inf";
    }
    return "?";
}
level parse_level(const std::string& s);

// Identical-vanishing profile (phi, rho, nu1, nu2) on a component of the
// given level.
struct field_profile_t {
    bool phi_vanishes;
    bool rho_vanishes;
    bool nu1_vanishes;
    bool nu2_vanishes;

    friend bool operator==(const field_profile_t&, const field_profile_t&) = default;
};

field_profile_t field_profile(level l);

// True iff an edge joining the two levels is consistent: no pair among
// (phi,nu1), (rho,nu2), (nu1,nu2) may vanish jointly at the node.
bool levels_may_meet(level a, level b);

struct vertex {
    int id = 0;
    int genus = 0;
    level lev = level::l1;
    fifths dL;
    fifths dN;
};

struct edge {
    int a = 0;
    int b = 0;
    std::optional<int> stacky;  // mu_5 index in 1..4, if the node is stacky
};

struct leg {
    int v = 0;
    bool is_node = false;                    // node legs come from normalization only
    monodromy gamma = monodromy::rho1;       // markings
    std::optional<int> node_stacky;          // node legs: mu_5 index, if stacky
};

struct decorated_graph {
    std::vector<vertex> vertices;
    std::vector<edge> edges;
    std::vector<leg> legs;
    bool allow_self_loops = false;

    const vertex* find_vertex(int id) const;
    // Incident edge ends plus legs of any kind ("|E_v|").
    int valence(int id) const;
    int marking_count() const;
    // h^1 of the graph assuming it is connected.
    int h1() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1; }
    int total_genus() const;
    bool connected() const;
};

// Full invariant check against the ambient numerical data.  Violations of
// strict dL > 0 on levels 0/01 are reported as warnings when dL = 0.
validation_report validate_graph(const decorated_graph& g, const numerical_data& data);

enum class specialization { stable_maps_with_p_fields, five_spin_with_5p, mixed };
const char* specialization_name(specialization s);

// All vertices at level 0 -> stable maps with p-fields (nu1 = 0); all at
// level inf -> 5-spin with five p-fields (nu2 = 0); anything else is mixed.
specialization specialize(const decorated_graph& g);

// Cuts every edge into two node legs (splitting a stacky index m into the
// branch pair m, (5-m) mod 5) and returns the connected components; with all
// edges cut these are the single-vertex graphs, one per vertex.
std::vector<decorated_graph> normalize_at_edges(const decorated_graph& g);

// Numerical data carried by a (sub)graph: genus from its own vertices and h1,
// degrees re-summed, gamma from its marking legs.
numerical_data data_of_graph(const decorated_graph& g);

}  // namespace mspkit
