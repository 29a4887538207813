#include "mspkit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mspkit {

level parse_level(const std::string& s) {
    if (s == "0") return level::l0;
    if (s == "01") return level::l01;
    if (s == "1") return level::l1;
    if (s == "1inf") return level::l1inf;
    if (s == "inf") return level::linf;
    throw std::invalid_argument("unknown level: " + s);
}

field_profile_t field_profile(level l) {
    switch (l) {
        case level::l0: return {false, true, true, false};
        case level::l01: return {false, true, false, false};
        case level::l1: return {true, true, false, false};
        case level::l1inf: return {true, false, false, false};
        case level::linf: return {true, false, false, true};
    }
    throw std::logic_error("bad level");
}

bool levels_may_meet(level a, level b) {
    auto pa = field_profile(a), pb = field_profile(b);
    auto zero = [&](bool va, bool vb) { return va || vb; };
    // (phi, nu1), (rho, nu2), (nu1, nu2) are nowhere jointly zero.
    if (zero(pa.phi_vanishes, pb.phi_vanishes) && zero(pa.nu1_vanishes, pb.nu1_vanishes)) return false;
    if (zero(pa.rho_vanishes, pb.rho_vanishes) && zero(pa.nu2_vanishes, pb.nu2_vanishes)) return false;
    if (zero(pa.nu1_vanishes, pb.nu1_vanishes) && zero(pa.nu2_vanishes, pb.nu2_vanishes)) return false;
    return true;
}

const vertex* decorated_graph::find_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

int decorated_graph::valence(int id) const {
    int n = 0;
    for (const auto& e : edges) {
        if (e.a == id) ++n;
        if (e.b == id) ++n;
    }
    for (const auto& l : legs)
        if (l.v == id) ++n;
    return n;
}

int decorated_graph::marking_count() const {
    int n = 0;
    for (const auto& l : legs)
        if (!l.is_node) ++n;
    return n;
}

int decorated_graph::total_genus() const {
    int s = 0;
    for (const auto& v : vertices) s += v.genus;
    return s + h1();
}

bool decorated_graph::connected() const {
    if (vertices.empty()) return false;
    std::map<int, int> pos;
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i].id] = static_cast<int>(i);
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges) {
        auto ia = pos.find(e.a), ib = pos.find(e.b);
        if (ia == pos.end() || ib == pos.end()) continue;
        parent[find(ia->second)] = find(ib->second);
    }
    int root = find(0);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

validation_report validate_graph(const decorated_graph& g, const numerical_data& data) {
    validation_report rep;
    auto err = [&](std::string m) { rep.violations.push_back(std::move(m)); };

    if (g.vertices.empty()) {
        err("graph has no vertices");
        return rep;
    }
    std::set<int> ids;
    for (const auto& v : g.vertices) {
        if (!ids.insert(v.id).second) err("duplicate vertex id " + std::to_string(v.id));
        if (v.genus < 0) err("vertex " + std::to_string(v.id) + " has negative genus");
    }
    for (const auto& e : g.edges) {
        if (!ids.count(e.a) || !ids.count(e.b)) err("edge references unknown vertex");
        if (e.a == e.b && !g.allow_self_loops)
            err("self-loop at vertex " + std::to_string(e.a));
        if (e.stacky && (*e.stacky < 1 || *e.stacky > 4))
            err("edge stacky index out of range 1..4");
    }
    for (const auto& l : g.legs)
        if (!ids.count(l.v)) err("leg references unknown vertex");
    if (!rep.violations.empty()) return rep;

    if (!g.connected()) err("graph is not connected");
    if (g.total_genus() != data.g)
        err("graph genus " + std::to_string(g.total_genus()) + " != g = " + std::to_string(data.g));

    for (const auto& e : g.edges) {
        const vertex* a = g.find_vertex(e.a);
        const vertex* b = g.find_vertex(e.b);
        if (!levels_may_meet(a->lev, b->lev))
            err("edge joins incompatible levels " + std::string(level_name(a->lev)) + " and " +
                level_name(b->lev));
    }

    fifths sum_dL0, sum_dNinf;
    for (const auto& v : g.vertices) {
        std::string vn = "vertex " + std::to_string(v.id);
        switch (v.lev) {
            case level::l0:
            case level::l01:
                if (!v.dN.is_zero()) err(vn + ": dN must be 0 at level " + level_name(v.lev));
                if (v.dL.raw < 0)
                    err(vn + ": dL must be positive at level " + level_name(v.lev));
                else if (v.dL.raw == 0)
                    rep.warnings.push_back(vn + ": dL = 0 at level " + level_name(v.lev) +
                                           " (strict positivity convention)");
                sum_dL0 += v.dL;
                break;
            case level::l1:
                if (!v.dL.is_zero() || !v.dN.is_zero()) err(vn + ": dL = dN = 0 required at level 1");
                break;
            case level::l1inf:
                if (!(v.dL + v.dN).is_zero()) err(vn + ": dL + dN must be 0 at level 1inf");
                if (v.dN.raw <= 0) err(vn + ": dN must be positive at level 1inf");
                sum_dNinf += v.dN;
                break;
            case level::linf: {
                if (!(v.dL + v.dN).is_zero()) err(vn + ": dL + dN must be 0 at level inf");
                fifths want{2 - 2 * v.genus - g.valence(v.id)};
                if (v.dN != want)
                    err(vn + ": dN = " + v.dN.str() + " != (1/5)(2-2g-|E_v|) = " + want.str());
                sum_dNinf += v.dN;
                break;
            }
        }
    }
    if (sum_dL0 != data.d0)
        err("sum of dL over levels 0,01 is " + sum_dL0.str() + " != d0 = " + data.d0.str());
    if (sum_dNinf != data.dinf)
        err("sum of dN over levels 1inf,inf is " + sum_dNinf.str() + " != dinf = " + data.dinf.str());

    std::vector<monodromy> seen;
    for (const auto& l : g.legs) {
        if (l.is_node) continue;
        const vertex* v = g.find_vertex(l.v);
        if (l.gamma == monodromy::rho1 && v->lev == level::linf)
            err("(1,rho) marking on a level-inf vertex (rho is nowhere vanishing there)");
        if (l.gamma == monodromy::phi1 && v->lev == level::l0)
            err("(1,phi) marking on a level-0 vertex (phi is nowhere vanishing there)");
        seen.push_back(l.gamma);
    }
    if (seen != data.gamma) err("marking monodromy sequence does not match gamma");

    return rep;
}

const char* specialization_name(specialization s) {
    switch (s) {
        case specialization::stable_maps_with_p_fields: return "stable_maps_with_p_fields";
        case specialization::five_spin_with_5p: return "five_spin_with_5p";
        case specialization::mixed: return "mixed";
    }
    return "?";
}

specialization specialize(const decorated_graph& g) {
    bool all0 = true, allinf = true;
    for (const auto& v : g.vertices) {
        all0 &= v.lev == level::l0;
        allinf &= v.lev == level::linf;
    }
    if (all0) return specialization::stable_maps_with_p_fields;
    if (allinf) return specialization::five_spin_with_5p;
    return specialization::mixed;
}

std::vector<decorated_graph> normalize_at_edges(const decorated_graph& g) {
    std::map<int, decorated_graph> comps;
    for (const auto& v : g.vertices) {
        decorated_graph& c = comps[v.id];
        c.vertices.push_back(v);
        c.allow_self_loops = g.allow_self_loops;
    }
    for (const auto& l : g.legs) comps[l.v].legs.push_back(l);
    for (const auto& e : g.edges) {
        // Branch monodromies pair as m and (5-m) mod 5; the lower id takes m.
        std::optional<int> ma = e.stacky, mb;
        if (e.stacky) mb = (5 - *e.stacky) % 5;
        if (e.b < e.a) std::swap(ma, mb);
        comps[e.a].legs.push_back(leg{e.a, true, monodromy::one, ma});
        comps[e.b].legs.push_back(leg{e.b, true, monodromy::one, mb});
    }
    std::vector<decorated_graph> out;
    out.reserve(comps.size());
    for (auto& [id, c] : comps) out.push_back(std::move(c));
    return out;
}

numerical_data data_of_graph(const decorated_graph& g) {
    numerical_data d;
    d.g = g.total_genus();
    for (const auto& l : g.legs)
        if (!l.is_node) d.gamma.push_back(l.gamma);
    for (const auto& v : g.vertices) {
        if (v.lev == level::l0 || v.lev == level::l01) d.d0 += v.dL;
        if (v.lev == level::l1inf || v.lev == level::linf) d.dinf += v.dN;
    }
    return d;
}

}  // namespace mspkit
