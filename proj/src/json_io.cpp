#include "mspkit/json_io.hpp"

namespace mspkit {

json to_json(fifths f) { return json{{"fifths", f.raw}}; }

fifths fifths_from_json(const json& j) {
    if (j.is_object()) return fifths{j.at("fifths").get<std::int64_t>()};
    if (j.is_number_integer()) return fifths::from_integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_fifths(j.get<std::string>());
    throw std::invalid_argument("expected a degree in fifths");
}

json to_json(monodromy m) { return monodromy_name(m); }
monodromy monodromy_from_json(const json& j) { return parse_monodromy(j.get<std::string>()); }

json to_json(const numerical_data& d) {
    json gs = json::array();
    for (auto m : d.gamma) gs.push_back(to_json(m));
    return json{{"g", d.g}, {"gamma", gs}, {"d0", to_json(d.d0)}, {"dinf", to_json(d.dinf)}};
}

numerical_data numerical_from_json(const json& j) {
    numerical_data d;
    d.g = j.at("g").get<int>();
    if (j.contains("gamma"))
        for (const auto& m : j.at("gamma")) d.gamma.push_back(monodromy_from_json(m));
    if (j.contains("d0")) d.d0 = fifths_from_json(j.at("d0"));
    if (j.contains("dinf")) d.dinf = fifths_from_json(j.at("dinf"));
    return d;
}

json to_json(const decorated_graph& g) {
    json vs = json::array();
    for (const auto& v : g.vertices)
        vs.push_back(json{{"id", v.id},
                          {"g", v.genus},
                          {"level", level_name(v.lev)},
                          {"dL", to_json(v.dL)},
                          {"dN", to_json(v.dN)}});
    json es = json::array();
    for (const auto& e : g.edges) {
        json attrs;
        attrs["stacky"] = e.stacky ? json(*e.stacky) : json(nullptr);
        es.push_back(json::array({e.a, e.b, attrs}));
    }
    json ls = json::array();
    for (const auto& l : g.legs) {
        if (l.is_node) {
            json jl{{"v", l.v}, {"node", true}};
            jl["stacky"] = l.node_stacky ? json(*l.node_stacky) : json(nullptr);
            ls.push_back(jl);
        } else {
            ls.push_back(json{{"v", l.v}, {"gamma", to_json(l.gamma)}});
        }
    }
    return json{{"vertices", vs}, {"edges", es}, {"legs", ls}};
}

decorated_graph graph_from_json(const json& j) {
    decorated_graph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.push_back(vertex{v.at("id").get<int>(), v.at("g").get<int>(),
                                    parse_level(v.at("level").get<std::string>()),
                                    fifths_from_json(v.at("dL")), fifths_from_json(v.at("dN"))});
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            edge ed;
            ed.a = e.at(0).get<int>();
            ed.b = e.at(1).get<int>();
            if (e.size() > 2 && e.at(2).contains("stacky") && !e.at(2).at("stacky").is_null())
                ed.stacky = e.at(2).at("stacky").get<int>();
            g.edges.push_back(ed);
        }
    if (j.contains("legs"))
        for (const auto& l : j.at("legs")) {
            leg lg;
            lg.v = l.at("v").get<int>();
            if (l.contains("node") && l.at("node").get<bool>()) {
                lg.is_node = true;
                lg.gamma = monodromy::one;
                if (l.contains("stacky") && !l.at("stacky").is_null())
                    lg.node_stacky = l.at("stacky").get<int>();
            } else {
                lg.gamma = monodromy_from_json(l.at("gamma"));
            }
            g.legs.push_back(lg);
        }
    if (j.contains("allow_self_loops")) g.allow_self_loops = j.at("allow_self_loops").get<bool>();
    return g;
}

json to_json(const validation_report& r) {
    return json{{"valid", r.valid()}, {"violations", r.violations}, {"warnings", r.warnings}};
}

json to_json(const stability_report& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json jw;
        jw["vertex"] = w.vertex_id ? json(*w.vertex_id) : json(nullptr);
        jw["case"] = instability_case_name(w.kind);
        ws.push_back(jw);
    }
    return json{{"stable", r.stable()}, {"witnesses", ws}, {"warnings", r.warnings}};
}

json to_json(const state_class& x) {
    json p5 = json::array();
    for (const auto& [key, c] : x.p5())
        p5.push_back(json::array(
            {rat_num(c).str(), rat_den(c).str(), key.first, key.second}));
    json mu5 = json::object();
    for (int j = 1; j <= 4; ++j) {
        if (x.mu5(j).empty()) continue;
        json terms = json::array();
        for (const auto& [b, c] : x.mu5(j))
            terms.push_back(json::array({rat_num(c).str(), rat_den(c).str(), b}));
        mu5[std::to_string(j)] = terms;
    }
    return json{{"p5", p5}, {"mu5", mu5}};
}

namespace {
rational rat_from_pair(const json& num, const json& den) {
    auto read = [](const json& v) -> bigint {
        if (v.is_string()) return bigint(v.get<std::string>());
        return bigint(v.get<std::int64_t>());
    };
    bigint d = read(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return rational(read(num), d);
}
}  // namespace

state_class state_from_json(const json& j) {
    state_class x;
    if (j.contains("p5"))
        for (const auto& t : j.at("p5"))
            x.add_p5(rat_from_pair(t.at(0), t.at(1)), t.at(2).get<int>(), t.at(3).get<int>());
    if (j.contains("mu5"))
        for (const auto& [key, terms] : j.at("mu5").items())
            for (const auto& t : terms)
                x.add_mu5(rat_from_pair(t.at(0), t.at(1)), std::stoi(key), t.at(2).get<int>());
    return x;
}

json to_json(const surface_model& s) {
    json cs = json::array();
    for (const auto& c : s.components) {
        json ms = json::array();
        for (const auto& m : c.markings) ms.push_back(json{{"pre_stacky", m.pre_stacky}});
        cs.push_back(json{{"id", c.id}, {"g", c.genus}, {"markings", ms}});
    }
    json ns = json::array();
    for (const auto& n : s.nodes) ns.push_back(json::array({n.a, n.b, n.thickness}));
    json ss = json::array();
    for (const auto& sec : s.sections) {
        json js{{"id", sec.id},
                {"kind", sec.kind == section_kind::A ? "A" : "B"},
                {"coeff", to_json(sec.coeff)},
                {"component", sec.component}};
        js["at_marking"] = sec.at_marking ? json(*sec.at_marking) : json(nullptr);
        ss.push_back(js);
    }
    return json{{"components", cs}, {"nodes", ns}, {"sections", ss}};
}

surface_model surface_from_json(const json& j) {
    surface_model s;
    for (const auto& c : j.at("components")) {
        surface_component sc;
        sc.id = c.at("id").get<int>();
        sc.genus = c.at("g").get<int>();
        if (c.contains("markings"))
            for (const auto& m : c.at("markings"))
                sc.markings.push_back(surface_marking{m.at("pre_stacky").get<bool>()});
        s.components.push_back(std::move(sc));
    }
    if (j.contains("nodes"))
        for (const auto& n : j.at("nodes")) {
            surface_node nd;
            nd.a = n.at(0).get<int>();
            nd.b = n.at(1).get<int>();
            nd.thickness = n.size() > 2 ? n.at(2).get<int>() : 1;
            s.nodes.push_back(nd);
        }
    if (j.contains("sections"))
        for (const auto& sec : j.at("sections")) {
            section_datum sd;
            sd.id = sec.at("id").get<int>();
            sd.kind = sec.at("kind").get<std::string>() == "A" ? section_kind::A : section_kind::B;
            sd.coeff = fifths_from_json(sec.at("coeff"));
            sd.component = sec.at("component").get<int>();
            if (sec.contains("at_marking") && !sec.at("at_marking").is_null())
                sd.at_marking = sec.at("at_marking").get<int>();
            s.sections.push_back(sd);
        }
    return s;
}

json to_json(const pre_basket& pb) {
    json l = json::array(), m = json::array();
    for (const auto& c : pb.surface.components) {
        l.push_back(json::array({c.id, pb.l_of(c.id)}));
        m.push_back(json::array({c.id, pb.m_of(c.id).raw}));  // in fifths
    }
    return json{{"surface", to_json(pb.surface)}, {"l", l}, {"m", m}};
}

pre_basket pre_basket_from_json(const json& j) {
    pre_basket pb;
    pb.surface = surface_from_json(j.at("surface"));
    if (j.contains("l"))
        for (const auto& e : j.at("l")) pb.l[e.at(0).get<int>()] = e.at(1).get<long long>();
    if (j.contains("m"))
        for (const auto& e : j.at("m"))
            pb.m[e.at(0).get<int>()] = fifths{e.at(1).get<std::int64_t>()};
    return pb;
}

json to_json(const reduction_trace& t) {
    json steps = json::array();
    for (const auto& st : t.steps) {
        json d = json::array();
        for (const auto& [id, v] : st.defect_after) d.push_back(json::array({id, v}));
        steps.push_back(json{{"op", st.op},
                             {"component", st.site_component},
                             {"section", st.site_section},
                             {"node", st.site_node},
                             {"v_before", {st.v_before[0], st.v_before[1], st.v_before[2]}},
                             {"v_after", {st.v_after[0], st.v_after[1], st.v_after[2]}},
                             {"defect_after", d}});
    }
    json cyc = json::array();
    for (const auto& state : t.cycle) {
        json s = json::array();
        for (const auto& [l5, m5] : state) s.push_back(json::array({l5, m5}));
        cyc.push_back(s);
    }
    return json{{"strategy", t.strategy == separate_strategy::paper ? "paper" : "pullback"},
                {"status", t.status},
                {"steps", steps},
                {"cycle", cyc}};
}

reduction_trace trace_from_json(const json& j) {
    reduction_trace t;
    t.strategy = j.at("strategy").get<std::string>() == "paper" ? separate_strategy::paper
                                                                : separate_strategy::pullback;
    t.status = j.value("status", "");
    for (const auto& s : j.at("steps")) {
        reduction_step st;
        st.op = s.at("op").get<std::string>();
        st.site_component = s.at("component").get<int>();
        st.site_section = s.at("section").get<int>();
        st.site_node = s.at("node").get<int>();
        for (int i = 0; i < 3; ++i) {
            st.v_before[i] = s.at("v_before").at(i).get<long long>();
            st.v_after[i] = s.at("v_after").at(i).get<long long>();
        }
        for (const auto& d : s.at("defect_after"))
            st.defect_after.emplace_back(d.at(0).get<int>(), d.at(1).get<std::string>());
        t.steps.push_back(std::move(st));
    }
    return t;
}

json to_json(const canonical_graph& g, bool emit_aux) {
    json out{{"graph", to_json(g.graph)}};
    if (emit_aux) {
        json aux = json::array();
        for (const auto& [id, n] : g.aux) aux.push_back(json::array({id, n}));
        out["aux_legs"] = aux;
    }
    return out;
}

degeneration_desc degeneration_from_json(const json& j) {
    degeneration_desc d;
    surface_model s = surface_from_json(j);  // reuse components/nodes parsing
    d.components = std::move(s.components);
    d.nodes = std::move(s.nodes);
    auto parse_secs = [&](const char* key, std::vector<degeneration_section>& out) {
        if (!j.contains(key)) return;
        for (const auto& e : j.at(key)) {
            degeneration_section ds;
            ds.component = e.at("component").get<int>();
            ds.coeff = fifths_from_json(e.at("coeff"));
            if (e.contains("at_marking") && !e.at("at_marking").is_null())
                ds.at_marking = e.at("at_marking").get<int>();
            out.push_back(ds);
        }
    };
    parse_secs("nu2_closure", d.nu2_closure);
    parse_secs("rho_closure", d.rho_closure);
    if (j.contains("l"))
        for (const auto& e : j.at("l")) d.l[e.at(0).get<int>()] = e.at(1).get<long long>();
    if (j.contains("m"))
        for (const auto& e : j.at("m"))
            d.m[e.at(0).get<int>()] = fifths{e.at(1).get<std::int64_t>()};
    return d;
}

}  // namespace mspkit
