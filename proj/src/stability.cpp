#include "mspkit/stability.hpp"

#include <algorithm>

namespace mspkit {

const char* instability_case_name(instability_case c) {
    switch (c) {
        case instability_case::case1: return "case1";
        case instability_case::case2_trivial: return "case2_trivial";
        case instability_case::case2_rho: return "case2_rho";
        case instability_case::case3: return "case3";
        case instability_case::case4: return "case4";
    }
    return "?";
}

namespace {

// The single incident edge or leg of a valence-1 vertex carries a nontrivial
// mu_5 index; case 2 via nowhere-vanishing rho needs a stacky point.
bool incident_item_stacky(const decorated_graph& g, int id) {
    for (const auto& e : g.edges) {
        if (e.a == id || e.b == id) return e.stacky.has_value();
    }
    for (const auto& l : g.legs) {
        if (l.v != id) continue;
        if (l.is_node) return l.node_stacky && *l.node_stacky != 0;
        return monodromy_index(l.gamma) != 0;
    }
    return false;
}

}  // namespace

stability_report find_witnesses(const decorated_graph& g, const numerical_data& data) {
    stability_report rep;

    bool has_legs = !g.legs.empty();
    if (g.vertices.size() == 1 && !has_legs) {
        const vertex& v = g.vertices.front();
        int genus = g.total_genus();
        if (genus == 0 && g.edges.empty() && v.dL.is_zero() && v.dN.is_zero())
            rep.witnesses.push_back({std::nullopt, instability_case::case3});
        if (genus == 1 && v.dL.is_zero() && v.dN.is_zero())
            rep.witnesses.push_back({std::nullopt, instability_case::case4});
    }

    for (const auto& v : g.vertices) {
        if (v.genus != 0) continue;
        int val = g.valence(v.id);
        // Self-loops contribute two special points to the component itself,
        // so they never leave a rational vertex below valence 2.
        bool self_loop = false;
        for (const auto& e : g.edges)
            if (e.a == v.id && e.b == v.id) self_loop = true;
        if (self_loop) continue;

        if (val == 2 && v.dL.is_zero()) {
            rep.witnesses.push_back({v.id, instability_case::case1});
        } else if (val == 1) {
            if (v.dL.is_zero() && v.dN.is_zero())
                rep.witnesses.push_back({v.id, instability_case::case2_trivial});
            bool rho_nonzero = v.lev == level::l1inf || v.lev == level::linf;
            if (rho_nonzero && v.dL == fifths{-1}) {
                rep.witnesses.push_back({v.id, instability_case::case2_rho});
                if (!incident_item_stacky(g, v.id))
                    rep.warnings.push_back("vertex " + std::to_string(v.id) +
                                           ": case2_rho requires a stacky special point but the "
                                           "incident edge or leg carries no mu_5 index");
            }
        }
    }

    std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const auto& a, const auto& b) {
        int ia = a.vertex_id ? *a.vertex_id : -1;
        int ib = b.vertex_id ? *b.vertex_id : -1;
        if (ia != ib) return ia < ib;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    (void)data;
    return rep;
}

bool is_stable(const decorated_graph& g, const numerical_data& data) {
    return find_witnesses(g, data).stable();
}

bool split_stability(const decorated_graph& g, const numerical_data& data) {
    (void)data;
    for (const auto& piece : normalize_at_edges(g))
        if (!is_stable(piece, data_of_graph(piece))) return false;
    return true;
}

}  // namespace mspkit
