#include "mspkit/basket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mspkit {

// --------------------------------------------------------------------------
// surface_model
// --------------------------------------------------------------------------

const surface_component* surface_model::find_component(int id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

surface_component* surface_model::find_component(int id) {
    for (auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

int surface_model::next_component_id() const {
    int mx = 0;
    for (const auto& c : components) mx = std::max(mx, c.id);
    return mx + 1;
}

rational surface_model::pairing(int i, int j) const {
    rational p = 0;
    if (i == j) {
        for (const auto& n : nodes)
            if (n.a == i || n.b == i) p -= rational(1, n.thickness);
    } else {
        for (const auto& n : nodes)
            if ((n.a == i && n.b == j) || (n.a == j && n.b == i)) p += rational(1, n.thickness);
    }
    return p;
}

int surface_model::branches(int id) const {
    int n = 0;
    for (const auto& nd : nodes) {
        if (nd.a == id) ++n;
        if (nd.b == id) ++n;
    }
    return n;
}

int surface_model::wdeg(int id) const {
    const surface_component* c = find_component(id);
    if (!c) throw basket_error("unknown component " + std::to_string(id));
    return 2 * c->genus - 2 + branches(id) + static_cast<int>(c->markings.size());
}

validation_report surface_model::validate() const {
    validation_report rep;
    auto err = [&](std::string s) { rep.violations.push_back(std::move(s)); };

    if (components.empty()) {
        err("surface has no components");
        return rep;
    }
    std::set<int> ids;
    for (const auto& c : components) {
        if (!ids.insert(c.id).second) err("duplicate component id " + std::to_string(c.id));
        if (c.genus < 0) err("component " + std::to_string(c.id) + " has negative genus");
    }
    for (const auto& n : nodes) {
        if (!ids.count(n.a) || !ids.count(n.b)) err("node references unknown component");
        if (n.a == n.b) err("node joins component " + std::to_string(n.a) + " to itself");
        if (n.thickness < 1) err("node thickness must be >= 1");
    }
    if (!rep.violations.empty()) return rep;

    // connectivity of the dual graph
    std::map<int, int> pos;
    int k = 0;
    for (const auto& c : components) pos[c.id] = k++;
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& n : nodes) parent[find(pos[n.a])] = find(pos[n.b]);
    for (int i = 1; i < k; ++i)
        if (find(i) != find(0)) {
            err("central fiber is not connected");
            break;
        }

    std::set<int> sids;
    std::set<std::pair<int, int>> used_markings;
    for (const auto& s : sections) {
        std::string sn = "section " + std::to_string(s.id);
        if (!sids.insert(s.id).second) err("duplicate section id " + std::to_string(s.id));
        const surface_component* c = find_component(s.component);
        if (!c) {
            err(sn + " attached to unknown component");
            continue;
        }
        bool pre_stacky = false;
        if (s.at_marking) {
            if (*s.at_marking < 0 || *s.at_marking >= static_cast<int>(c->markings.size())) {
                err(sn + " references a marking that does not exist");
                continue;
            }
            if (!used_markings.insert({s.component, *s.at_marking}).second)
                err(sn + " shares a marking with another section (sections must be disjoint)");
            pre_stacky = c->markings[*s.at_marking].pre_stacky;
        }
        if (s.coeff.raw <= 0) err(sn + " has non-positive coefficient");
        if (s.kind == section_kind::B) {
            if (!s.coeff.is_integer()) err(sn + ": B-coefficients must be integers");
            if (pre_stacky) err(sn + ": B-sections must sit at regular markings");
        } else {
            if (!pre_stacky && !s.coeff.is_integer())
                err(sn + ": A-coefficients away from pre-stacky markings must be integers");
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// pre_basket basics
// --------------------------------------------------------------------------

long long pre_basket::l_of(int id) const {
    auto it = l.find(id);
    return it == l.end() ? 0 : it->second;
}

fifths pre_basket::m_of(int id) const {
    auto it = m.find(id);
    return it == m.end() ? fifths{} : it->second;
}

rational defect(const pre_basket& pb, int comp) {
    rational d = 0;
    for (const auto& s : pb.surface.sections) {
        if (s.component != comp) continue;
        if (s.kind == section_kind::B)
            d += s.coeff.to_rational();
        else
            d -= 5 * s.coeff.to_rational();
    }
    for (const auto& c : pb.surface.components) {
        rational p = pb.surface.pairing(c.id, comp);
        if (p == 0) continue;
        d += (rational(pb.l_of(c.id)) - pb.m_of(c.id).to_rational() * 5) * p;
    }
    d -= pb.surface.wdeg(comp);
    return d;
}

std::map<int, rational> defect_vector(const pre_basket& pb) {
    std::map<int, rational> v;
    for (const auto& c : pb.surface.components) v[c.id] = defect(pb, c.id);
    return v;
}

bool defect_free(const pre_basket& pb) {
    for (const auto& c : pb.surface.components)
        if (defect(pb, c.id) != 0) return false;
    return true;
}

namespace {

std::set<int> components_meeting(const pre_basket& pb, section_kind k) {
    std::set<int> out;
    for (const auto& s : pb.surface.sections)
        if (s.kind == k) out.insert(s.component);
    return out;
}

std::set<std::pair<int, int>> adjacent_pairs(const surface_model& s) {
    std::set<std::pair<int, int>> out;
    for (const auto& n : s.nodes) {
        out.insert({n.a, n.b});
        out.insert({n.b, n.a});
    }
    return out;
}

}  // namespace

long long V1(const pre_basket& pb) {
    long long v = 0;
    for (int c : components_meeting(pb, section_kind::B)) v += pb.m_of(c).raw;
    return v;
}

long long V2(const pre_basket& pb) {
    long long v = 0;
    for (int c : components_meeting(pb, section_kind::A)) v += pb.l_of(c);
    return v;
}

long long V3(const pre_basket& pb) {
    long long v = 0;
    for (const auto& [i, j] : adjacent_pairs(pb.surface)) v += pb.l_of(i) * pb.m_of(j).raw;
    return v;
}

pre_basket shift(const pre_basket& pb) {
    pre_basket out = pb;
    for (const auto& c : pb.surface.components) {
        long long li = pb.l_of(c.id);
        long long mi = pb.m_of(c.id).raw;  // 5 m_i
        long long r = std::min(mi, li);
        out.l[c.id] = li - r;
        out.m[c.id] = fifths{mi - r};
    }
    return out;
}

bool is_basket(const pre_basket& pb) {
    for (const auto& c : pb.surface.components) {
        long long li = pb.l_of(c.id);
        long long mi = pb.m_of(c.id).raw;
        if (li < 0 || mi < 0 || li * mi != 0) return false;
    }
    return true;
}

bool is_final(const pre_basket& pb) {
    if (!is_basket(pb)) return false;
    auto bcomps = components_meeting(pb, section_kind::B);
    auto acomps = components_meeting(pb, section_kind::A);
    for (const auto& c : pb.surface.components) {
        if (pb.m_of(c.id).raw != 0 && bcomps.count(c.id)) return false;
        if (pb.l_of(c.id) != 0 && acomps.count(c.id)) return false;
    }
    for (const auto& [i, j] : adjacent_pairs(pb.surface))
        if (pb.l_of(i) * pb.m_of(j).raw != 0) return false;
    return true;
}

// --------------------------------------------------------------------------
// Modifications
// --------------------------------------------------------------------------

namespace {

section_datum* find_section(pre_basket& pb, int id) {
    for (auto& s : pb.surface.sections)
        if (s.id == id) return &s;
    return nullptr;
}

// Moves the section, and the marking it sits at if any, onto the fresh
// exceptional component.  Returns epsilon (0 at a marking, 1 otherwise).
int move_section_to(pre_basket& pb, section_datum& s, int e_id) {
    if (!s.at_marking) {
        s.component = e_id;
        return 1;
    }
    int from = s.component, idx = *s.at_marking;
    surface_component* src = pb.surface.find_component(from);
    surface_component* dst = pb.surface.find_component(e_id);
    dst->markings.push_back(src->markings[idx]);
    src->markings.erase(src->markings.begin() + idx);
    for (auto& other : pb.surface.sections)
        if (other.component == from && other.at_marking && *other.at_marking > idx)
            --*other.at_marking;
    s.component = e_id;
    s.at_marking = static_cast<int>(dst->markings.size()) - 1;
    return 0;
}

}  // namespace

pre_basket blowup_B(const pre_basket& pb, int jbar, int section_id) {
    pre_basket out = pb;
    section_datum* s = find_section(out, section_id);
    if (!s) throw basket_error("no section with id " + std::to_string(section_id));
    if (s->kind != section_kind::B || s->component != jbar)
        throw basket_error("blowup_B needs a B-section on the chosen component");
    if (pb.m_of(jbar).raw <= 0 || pb.l_of(jbar) != 0)
        throw basket_error("blowup_B needs m > 0 and l = 0 on the component");

    int e_id = out.surface.next_component_id();
    out.surface.components.push_back(surface_component{e_id, 0, {}});
    int eps = move_section_to(out, *s, e_id);
    out.surface.nodes.push_back(surface_node{e_id, jbar, 1});
    out.l[e_id] = s->coeff.to_integer() + eps;
    out.m[e_id] = pb.m_of(jbar);
    return shift(out);
}

pre_basket blowup_A(const pre_basket& pb, int ibar, int section_id) {
    pre_basket out = pb;
    section_datum* s = find_section(out, section_id);
    if (!s) throw basket_error("no section with id " + std::to_string(section_id));
    if (s->kind != section_kind::A || s->component != ibar)
        throw basket_error("blowup_A needs an A-section on the chosen component");
    if (pb.l_of(ibar) <= 0 || pb.m_of(ibar).raw != 0)
        throw basket_error("blowup_A needs l > 0 and m = 0 on the component");

    int e_id = out.surface.next_component_id();
    out.surface.components.push_back(surface_component{e_id, 0, {}});
    int eps = move_section_to(out, *s, e_id);
    out.surface.nodes.push_back(surface_node{e_id, ibar, 1});
    out.l[e_id] = pb.l_of(ibar) + eps;
    out.m[e_id] = s->coeff;
    return shift(out);
}

pre_basket separate_bad_node(const pre_basket& pb, int node_index, separate_strategy strategy) {
    if (node_index < 0 || node_index >= static_cast<int>(pb.surface.nodes.size()))
        throw basket_error("node index out of range");
    const surface_node n = pb.surface.nodes[node_index];
    int ibar, jbar;
    if (pb.l_of(n.a) > 0 && pb.m_of(n.b).raw > 0) {
        ibar = n.a;
        jbar = n.b;
    } else if (pb.l_of(n.b) > 0 && pb.m_of(n.a).raw > 0) {
        ibar = n.b;
        jbar = n.a;
    } else {
        throw basket_error("node is not bad: needs l > 0 on one side and m > 0 on the other");
    }

    pre_basket out = pb;
    if (strategy == separate_strategy::paper) {
        // One (-2)-curve with the literal coefficients (l_ibar, m_jbar), then
        // shift.  Degree bookkeeping across the new curve is not preserved.
        out.surface.nodes.erase(out.surface.nodes.begin() + node_index);
        int e_id = out.surface.next_component_id();
        out.surface.components.push_back(surface_component{e_id, 0, {}});
        out.surface.nodes.push_back(surface_node{e_id, ibar, 1});
        out.surface.nodes.push_back(surface_node{e_id, jbar, 1});
        out.l[e_id] = pb.l_of(ibar);
        out.m[e_id] = pb.m_of(jbar);
        return shift(out);
    }

    // PULLBACK: order-2 base change.  All vertical multiplicities double, all
    // node thicknesses double, and every thickness-2 node is resolved by a
    // (-2)-curve carrying half the sum of its neighbours' doubled data.
    for (const auto& nd : pb.surface.nodes)
        if (nd.thickness != 1)
            throw basket_error("pullback separation expects a single-level model (thickness 1)");

    for (const auto& c : out.surface.components) {
        out.l[c.id] = 2 * pb.l_of(c.id);
        out.m[c.id] = fifths{2 * pb.m_of(c.id).raw};
    }
    std::vector<surface_node> old_nodes = out.surface.nodes;
    out.surface.nodes.clear();
    for (const auto& nd : old_nodes) {
        int e_id = out.surface.next_component_id();
        out.surface.components.push_back(surface_component{e_id, 0, {}});
        out.surface.nodes.push_back(surface_node{e_id, nd.a, 1});
        out.surface.nodes.push_back(surface_node{e_id, nd.b, 1});
        out.l[e_id] = pb.l_of(nd.a) + pb.l_of(nd.b);
        out.m[e_id] = pb.m_of(nd.a) + pb.m_of(nd.b);
    }
    return shift(out);
}

// --------------------------------------------------------------------------
// finalize
// --------------------------------------------------------------------------

namespace {

void record_step(reduction_trace& tr, const pre_basket& before, const pre_basket& after,
                 std::string op, int comp, int section, int node) {
    reduction_step st;
    st.op = std::move(op);
    st.site_component = comp;
    st.site_section = section;
    st.site_node = node;
    st.v_before[0] = V1(before);
    st.v_before[1] = V2(before);
    st.v_before[2] = V3(before);
    st.v_after[0] = V1(after);
    st.v_after[1] = V2(after);
    st.v_after[2] = V3(after);
    for (const auto& [id, d] : defect_vector(after)) st.defect_after.emplace_back(id, rat_str(d));
    tr.steps.push_back(std::move(st));
}

// Lowest (component, section) blowup site for the given phase.
std::optional<std::pair<int, int>> blowup_site(const pre_basket& pb, section_kind kind) {
    std::optional<std::pair<int, int>> best;
    for (const auto& s : pb.surface.sections) {
        if (s.kind != kind) continue;
        bool active = kind == section_kind::B ? pb.m_of(s.component).raw > 0
                                              : pb.l_of(s.component) > 0;
        if (!active) continue;
        auto cand = std::make_pair(s.component, s.id);
        if (!best || cand < *best) best = cand;
    }
    return best;
}

std::optional<int> bad_node_site(const pre_basket& pb) {
    std::optional<int> best;
    auto key = [&](int idx) {
        const auto& n = pb.surface.nodes[idx];
        return std::make_tuple(std::min(n.a, n.b), std::max(n.a, n.b), idx);
    };
    for (int i = 0; i < static_cast<int>(pb.surface.nodes.size()); ++i) {
        const auto& n = pb.surface.nodes[i];
        bool bad = pb.l_of(n.a) * pb.m_of(n.b).raw != 0 || pb.l_of(n.b) * pb.m_of(n.a).raw != 0;
        if (!bad) continue;
        if (!best || key(i) < key(*best)) best = i;
    }
    return best;
}

// Sorted (l, 5m) values over the bad nodes; the pullback dynamics act on this
// state by a deterministic map, so a recurring state certifies a cycle.
std::vector<std::pair<long long, long long>> bad_state(const pre_basket& pb) {
    std::vector<std::pair<long long, long long>> st;
    for (const auto& n : pb.surface.nodes) {
        if (pb.l_of(n.a) * pb.m_of(n.b).raw != 0)
            st.emplace_back(pb.l_of(n.a), pb.m_of(n.b).raw);
        if (pb.l_of(n.b) * pb.m_of(n.a).raw != 0)
            st.emplace_back(pb.l_of(n.b), pb.m_of(n.a).raw);
    }
    std::sort(st.begin(), st.end());
    return st;
}

}  // namespace

std::pair<pre_basket, reduction_trace> finalize(const pre_basket& pb, separate_strategy strategy,
                                                long long step_cap) {
    reduction_trace tr;
    tr.strategy = strategy;

    auto rep = pb.surface.validate();
    if (!rep.valid()) throw basket_error("invalid surface: " + rep.violations.front());
    if (!defect_free(pb)) throw basket_error("pre-basket has a nonzero defect vector");

    pre_basket cur = shift(pb);
    if (cur.l != pb.l || cur.m != pb.m) record_step(tr, pb, cur, "shift", -1, -1, -1);

    long long steps = static_cast<long long>(tr.steps.size());
    auto bump = [&]() {
        if (++steps > step_cap) {
            tr.status = "step_cap";
            throw step_cap_exceeded(tr, cur);
        }
    };

    while (auto site = blowup_site(cur, section_kind::B)) {
        bump();
        pre_basket next = blowup_B(cur, site->first, site->second);
        record_step(tr, cur, next, "blowup_b", site->first, site->second, -1);
        cur = std::move(next);
    }
    while (auto site = blowup_site(cur, section_kind::A)) {
        bump();
        pre_basket next = blowup_A(cur, site->first, site->second);
        record_step(tr, cur, next, "blowup_a", site->first, site->second, -1);
        cur = std::move(next);
    }

    std::map<std::vector<std::pair<long long, long long>>, std::size_t> seen;
    std::vector<std::vector<std::pair<long long, long long>>> states;
    if (strategy == separate_strategy::pullback) {
        auto st = bad_state(cur);
        seen[st] = 0;
        states.push_back(std::move(st));
    }

    while (auto site = bad_node_site(cur)) {
        bump();
        pre_basket next = separate_bad_node(cur, *site, strategy);
        record_step(tr, cur, next,
                    strategy == separate_strategy::paper ? "separate_paper" : "separate_pullback",
                    -1, -1, *site);
        cur = std::move(next);
        if (strategy == separate_strategy::pullback) {
            auto st = bad_state(cur);
            states.push_back(st);
            auto [it, fresh] = seen.emplace(st, states.size() - 1);
            if (!fresh) {
                tr.status = "cycle";
                tr.cycle.assign(states.begin() + static_cast<long>(it->second), states.end());
                throw cycle_detected(tr, cur);
            }
        }
    }

    tr.status = "final";
    return {cur, tr};
}

// --------------------------------------------------------------------------
// from_degeneration / to_graph
// --------------------------------------------------------------------------

pre_basket from_degeneration(const degeneration_desc& desc) {
    pre_basket pb;
    pb.surface.components = desc.components;
    pb.surface.nodes = desc.nodes;
    pb.l = desc.l;
    pb.m = desc.m;

    int sid = 1;
    for (const auto& a : desc.nu2_closure) {
        const surface_component* c = pb.surface.find_component(a.component);
        if (!c) throw basket_error("A-section attached to unknown component");
        fifths coeff = a.coeff;
        if (a.at_marking) {
            if (*a.at_marking < 0 || *a.at_marking >= static_cast<int>(c->markings.size()))
                throw basket_error("A-section references a marking that does not exist");
            if (c->markings[*a.at_marking].pre_stacky) {
                if (!a.coeff.is_integer())
                    throw basket_error("closure multiplicities must be integral");
                coeff = fifths{a.coeff.to_integer()};  // divide by 5 at pre-stacky markings
            }
        }
        pb.surface.sections.push_back(
            section_datum{sid++, section_kind::A, coeff, a.component, a.at_marking});
    }
    for (const auto& b : desc.rho_closure) {
        const surface_component* c = pb.surface.find_component(b.component);
        if (!c) throw basket_error("B-section attached to unknown component");
        if (b.at_marking) {
            if (*b.at_marking < 0 || *b.at_marking >= static_cast<int>(c->markings.size()))
                throw basket_error("B-section references a marking that does not exist");
            if (c->markings[*b.at_marking].pre_stacky)
                throw basket_error("B-sections must be assigned regular markings");
        }
        pb.surface.sections.push_back(
            section_datum{sid++, section_kind::B, b.coeff, b.component, b.at_marking});
    }

    auto rep = pb.surface.validate();
    if (!rep.valid()) throw basket_error("degeneration data violates a basket clause: " +
                                         rep.violations.front());
    for (const auto& c : pb.surface.components) {
        rational d = defect(pb, c.id);
        if (d != 0)
            throw basket_error("inconsistent degeneration data: defect(" + std::to_string(c.id) +
                               ") = " + rat_str(d));
    }
    return pb;
}

decorated_graph to_graph(const pre_basket& fin) {
    if (!is_final(fin)) throw basket_error("to_graph expects a final basket");

    decorated_graph g;
    std::set<int> b_comps = components_meeting(fin, section_kind::B);
    for (const auto& c : fin.surface.components) {
        rational dn = 0;
        for (const auto& s : fin.surface.sections)
            if (s.kind == section_kind::A && s.component == c.id) dn += s.coeff.to_rational();
        for (const auto& other : fin.surface.components)
            dn += fin.m_of(other.id).to_rational() * fin.surface.pairing(other.id, c.id);

        rational dn5 = dn * 5;
        if (rat_den(dn5) != 1)
            throw basket_error("component " + std::to_string(c.id) +
                               ": deg N is not in (1/5)Z: " + rat_str(dn));
        vertex v;
        v.id = c.id;
        v.genus = c.genus;
        v.dN = fifths{static_cast<std::int64_t>(rat_num(dn5))};
        v.dL = -v.dN;
        if (fin.m_of(c.id).raw > 0)
            v.lev = level::linf;
        else if (fin.l_of(c.id) > 0)
            v.lev = level::l1;
        else
            v.lev = level::l1inf;
        g.vertices.push_back(v);
    }
    for (const auto& n : fin.surface.nodes) g.edges.push_back(edge{n.a, n.b, std::nullopt});

    // Markings become legs; the L-monodromy at a marking is read off from the
    // fractional part of the A-coefficient sitting there, and index-0 markings
    // split into (1,rho) or (1,phi) according to B-support.
    for (const auto& c : fin.surface.components) {
        for (int idx = 0; idx < static_cast<int>(c.markings.size()); ++idx) {
            int zindex = 0;
            bool b_here = false;
            for (const auto& s : fin.surface.sections) {
                if (s.component != c.id || !s.at_marking || *s.at_marking != idx) continue;
                if (s.kind == section_kind::A) zindex = static_cast<int>(s.coeff.raw % 5);
                if (s.kind == section_kind::B) b_here = true;
            }
            monodromy mm;
            if (zindex != 0)
                mm = static_cast<monodromy>(static_cast<int>(monodromy::zeta1) + zindex - 1);
            else
                mm = b_here ? monodromy::rho1 : monodromy::phi1;
            g.legs.push_back(leg{c.id, false, mm, std::nullopt});
        }
    }
    return g;
}

}  // namespace mspkit
