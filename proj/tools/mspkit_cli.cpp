// mspkit: exact-arithmetic command line for MSP-field combinatorics.
//
// Exit codes: 0 success, 1 domain validation failure (report on stdout),
// 2 usage or parse error (message on stderr).  All output is exact JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mspkit/dimension.hpp"
#include "mspkit/json_io.hpp"
#include "mspkit/restack.hpp"

namespace {

using mspkit::json;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_doc(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        std::cerr << "input is not valid JSON: " << e.what() << "\n";
        std::exit(2);
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int fail(const json& report) {
    emit(report);
    return 1;
}

mspkit::numerical_data data_from_flags(int g, const std::string& d0, const std::string& dinf,
                                       const std::vector<std::string>& gamma) {
    mspkit::numerical_data data;
    data.g = g;
    data.d0 = mspkit::parse_fifths(d0);
    data.dinf = mspkit::parse_fifths(dinf);
    for (const auto& s : gamma) data.gamma.push_back(mspkit::parse_monodromy(s));
    return data;
}

long long env_step_cap() {
    if (const char* v = std::getenv("MSPKIT_STEP_CAP")) return std::atoll(v);
    return 1'000'000;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of mixed-spin-P fields of the quintic"};
    app.require_subcommand(1);

    int g = 0;
    std::string d0 = "0", dinf = "0";
    std::vector<std::string> gamma;
    std::string input = "-";

    auto add_data_flags = [&](CLI::App* cmd) {
        cmd->add_option("--g", g, "genus");
        cmd->add_option("--d0", d0, "d0 (integer or p/5)");
        cmd->add_option("--dinf", dinf, "dinf (integer or p/5)");
        cmd->add_option("--gamma", gamma, "markings: rho1|phi1|zeta1..zeta4");
    };

    auto* vdim_cmd = app.add_subcommand("vdim", "virtual dimension of the moduli");
    add_data_flags(vdim_cmd);

    auto* stab_cmd = app.add_subcommand("stab", "degree-level stability of a decorated graph");
    stab_cmd->add_option("--input", input, "JSON document {graph, data} (default stdin)");

    auto* enum_cmd = app.add_subcommand("enum", "enumerate degeneracy-locus graph types");
    add_data_flags(enum_cmd);
    int max_vertices = 0, jobs = 1;
    bool no_aux = false, emit_aux = false;
    std::uint64_t work_cap = 0, resume = 0;
    enum_cmd->add_option("--max-vertices", max_vertices, "vertex cap (0 = derived bound)");
    enum_cmd->add_flag("--no-aux-check", no_aux, "skip the quasi-stability filter");
    enum_cmd->add_flag("--emit-aux-legs", emit_aux, "include auxiliary leg counts");
    enum_cmd->add_option("--jobs", jobs, "worker threads (output is independent of this)");
    enum_cmd->add_option("--work-cap", work_cap, "work item budget (0 = unlimited)");
    enum_cmd->add_option("--resume", resume, "resume token from a capped run");

    auto* basket_cmd = app.add_subcommand("basket", "pre-basket rewriting engine");
    basket_cmd->require_subcommand(1);
    auto* reduce_cmd = basket_cmd->add_subcommand("reduce", "finalize a pre-basket");
    std::string strategy = "paper", trace_path;
    long long step_cap = env_step_cap();
    reduce_cmd->add_option("--input", input, "pre-basket or degeneration JSON (default stdin)");
    reduce_cmd->add_option("--strategy", strategy, "paper | pullback")
        ->check(CLI::IsMember({"paper", "pullback"}));
    reduce_cmd->add_option("--trace", trace_path, "write a replayable trace file");
    reduce_cmd->add_option("--step-cap", step_cap, "rewriting step cap");
    auto* replay_cmd = basket_cmd->add_subcommand("replay", "replay a trace file bit-exactly");
    std::string replay_path;
    replay_cmd->add_option("--trace", replay_path, "trace file from basket reduce")->required();

    auto* restack_cmd = app.add_subcommand("restack", "Cartier test and stacking decision");
    int rk = 1;
    long long rl = 0, rn1 = 0, rn2 = 0;
    restack_cmd->add_option("--k", rk, "node thickness")->required();
    restack_cmd->add_option("--l", rl, "class of the horizontal part mod k")->required();
    restack_cmd->add_option("--n1", rn1, "multiplicity of D1")->required();
    restack_cmd->add_option("--n2", rn2, "multiplicity of D2")->required();

    auto* ring_cmd = app.add_subcommand("ring", "state space arithmetic");
    ring_cmd->require_subcommand(1);
    auto* mul_cmd = ring_cmd->add_subcommand("mul", "product in H*_T(P5 u mu5)");
    mul_cmd->add_option("--input", input, "JSON {x, y} (default stdin)");
    auto* deg_cmd = ring_cmd->add_subcommand("deg", "degree report of a class");
    deg_cmd->add_option("--input", input, "state class JSON (default stdin)");
    auto* select_cmd = ring_cmd->add_subcommand("select", "selection exponent and vanishing");
    std::string dl_reading = "dinf";
    select_cmd->add_option("--input", input, "JSON {a, degs, data} (default stdin)");
    select_cmd->add_option("--dl-reading", dl_reading, "read the printed d_l as: dinf | d0")
        ->check(CLI::IsMember({"dinf", "d0"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*vdim_cmd) {
            auto data = data_from_flags(g, d0, dinf, gamma);
            auto rep = mspkit::validate_numerical(data);
            if (!rep.valid()) return fail(mspkit::to_json(rep));
            emit(json{{"vdim", mspkit::virtual_dim(data).to_integer()}});
            return 0;
        }

        if (*stab_cmd) {
            json doc = parse_doc(input);
            auto graph = mspkit::graph_from_json(doc.at("graph"));
            auto data = doc.contains("data") ? mspkit::numerical_from_json(doc.at("data"))
                                             : mspkit::data_of_graph(graph);
            auto vrep = mspkit::validate_graph(graph, data);
            if (!vrep.valid()) return fail(mspkit::to_json(vrep));
            emit(mspkit::to_json(mspkit::find_witnesses(graph, data)));
            return 0;
        }

        if (*enum_cmd) {
            mspkit::enum_request req;
            req.data = data_from_flags(g, d0, dinf, gamma);
            if (max_vertices > 0) req.max_vertices = max_vertices;
            req.aux_check = !no_aux;
            req.emit_aux_legs = emit_aux;
            req.jobs = jobs;
            req.work_cap = work_cap;
            req.resume_from_item = resume;
            auto render = [&](const mspkit::enum_result& res, bool partial,
                              std::uint64_t token) {
                json gs = json::array();
                for (const auto& cg : res.graphs) gs.push_back(mspkit::to_json(cg, emit_aux));
                json out{{"count", res.graphs.size()},
                         {"bound_used", res.bound_used},
                         {"graphs", gs}};
                if (partial) {
                    out["partial"] = true;
                    out["resume_token"] = token;
                }
                return out;
            };
            try {
                emit(render(mspkit::enumerate_theta(req), false, 0));
                return 0;
            } catch (const mspkit::enum_cap_exceeded& e) {
                return fail(render(e.partial, true, e.resume_token));
            } catch (const mspkit::invalid_data& e) {
                return fail(mspkit::to_json(e.report));
            }
        }

        if (*reduce_cmd) {
            json doc = parse_doc(input);
            mspkit::pre_basket pb = doc.contains("surface")
                                        ? mspkit::pre_basket_from_json(doc)
                                        : mspkit::from_degeneration(
                                              mspkit::degeneration_from_json(doc));
            auto strat = strategy == "paper" ? mspkit::separate_strategy::paper
                                             : mspkit::separate_strategy::pullback;
            auto write_trace = [&](const mspkit::pre_basket& initial,
                                   const mspkit::reduction_trace& tr, const json& final_json) {
                if (trace_path.empty()) return;
                std::ofstream out(trace_path);
                out << json{{"initial", mspkit::to_json(initial)},
                            {"strategy", strategy},
                            {"trace", mspkit::to_json(tr)},
                            {"final", final_json}}
                           .dump()
                    << "\n";
            };
            try {
                auto [fin, tr] = mspkit::finalize(pb, strat, step_cap);
                json fj = mspkit::to_json(fin);
                write_trace(pb, tr, fj);
                emit(json{{"final", fj},
                          {"trace", mspkit::to_json(tr)},
                          {"is_final", mspkit::is_final(fin)}});
                return 0;
            } catch (const mspkit::cycle_detected& e) {
                json fj = mspkit::to_json(e.state);
                write_trace(pb, e.trace, fj);
                return fail(json{{"error", "cycle"},
                                 {"trace", mspkit::to_json(e.trace)},
                                 {"state", fj}});
            } catch (const mspkit::step_cap_exceeded& e) {
                return fail(json{{"error", "step_cap"}, {"trace", mspkit::to_json(e.trace)}});
            }
        }

        if (*replay_cmd) {
            json doc = parse_doc(replay_path);
            mspkit::pre_basket cur = mspkit::pre_basket_from_json(doc.at("initial"));
            mspkit::reduction_trace tr = mspkit::trace_from_json(doc.at("trace"));
            cur = mspkit::shift(cur);
            for (const auto& st : tr.steps) {
                mspkit::pre_basket before = cur;
                if (st.op == "shift")
                    ;  // the initial shift was already applied
                else if (st.op == "blowup_b")
                    cur = mspkit::blowup_B(cur, st.site_component, st.site_section);
                else if (st.op == "blowup_a")
                    cur = mspkit::blowup_A(cur, st.site_component, st.site_section);
                else if (st.op == "separate_paper")
                    cur = mspkit::separate_bad_node(cur, st.site_node,
                                                    mspkit::separate_strategy::paper);
                else if (st.op == "separate_pullback")
                    cur = mspkit::separate_bad_node(cur, st.site_node,
                                                    mspkit::separate_strategy::pullback);
                else
                    throw std::invalid_argument("unknown op in trace: " + st.op);
                if (st.op != "shift" &&
                    (mspkit::V1(before) != st.v_before[0] || mspkit::V2(before) != st.v_before[1] ||
                     mspkit::V3(before) != st.v_before[2] || mspkit::V1(cur) != st.v_after[0] ||
                     mspkit::V2(cur) != st.v_after[1] || mspkit::V3(cur) != st.v_after[2]))
                    return fail(json{{"error", "replay mismatch"},
                                     {"op", st.op},
                                     {"state", mspkit::to_json(cur)}});
            }
            json fj = mspkit::to_json(cur);
            if (doc.contains("final") && doc.at("final") != fj)
                return fail(json{{"error", "replay final state differs"}, {"state", fj}});
            emit(json{{"final", fj}});
            return 0;
        }

        if (*restack_cmd) {
            mspkit::node_divisor_data d(rk, rn1, rn2, rl);
            emit(json{{"residue_k", mspkit::cartier_residue(d)},
                      {"residue_5k", mspkit::mod_pos(5 * d.l + d.n1 - d.n2, 5LL * d.k)},
                      {"decision",
                       mspkit::stacking_decision(d) == mspkit::stacking::scheme ? "scheme" : "mu5"}});
            return 0;
        }

        if (*mul_cmd) {
            json doc = parse_doc(input);
            try {
                emit(mspkit::to_json(mspkit::ring_mul(mspkit::state_from_json(doc.at("x")),
                                                      mspkit::state_from_json(doc.at("y")))));
                return 0;
            } catch (const mspkit::undefined_product& e) {
                return fail(json{{"error", e.what()}});
            }
        }

        if (*deg_cmd) {
            json doc = parse_doc(input);
            auto rep = mspkit::ring_deg(mspkit::state_from_json(doc));
            json degs = json::array();
            for (const auto& f : rep.degrees) degs.push_back(mspkit::to_json(f));
            emit(json{{"homogeneous", rep.homogeneous()}, {"degrees", degs}});
            return 0;
        }

        if (*select_cmd) {
            json doc = parse_doc(input);
            std::vector<int> a = doc.at("a").get<std::vector<int>>();
            std::vector<mspkit::fifths> degs;
            for (const auto& dj : doc.at("degs")) degs.push_back(mspkit::fifths_from_json(dj));
            auto data = mspkit::numerical_from_json(doc.at("data"));
            auto rep = mspkit::validate_numerical(data);
            if (!rep.valid()) return fail(mspkit::to_json(rep));
            auto baseline = dl_reading == "dinf" ? mspkit::exponent_baseline::dinf
                                                 : mspkit::exponent_baseline::d0;
            auto e = mspkit::selection_exponent(a, degs, data, baseline);
            emit(json{{"e", mspkit::to_json(e)}, {"vanishes", mspkit::vanishes_by_dimension(e)}});
            return 0;
        }
    } catch (const json::exception& e) {
        std::cerr << "malformed input document: " << e.what() << "\n";
        return 2;
    } catch (const mspkit::invalid_data& e) {
        return fail(mspkit::to_json(e.report));
    } catch (const std::domain_error& e) {
        return fail(json{{"error", e.what()}});
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
