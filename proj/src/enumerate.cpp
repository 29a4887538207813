#include "mspkit/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mspkit/dimension.hpp"

namespace mspkit {

std::map<int, int> auxiliary_legs(const decorated_graph& g) {
    std::map<int, int> aux;
    for (const auto& v : g.vertices) {
        int count = 0;
        if (v.lev == level::l0 || v.lev == level::l01) {
            // 3 deg L legs; a fractional count cannot come from a field.
            if (v.dL.raw < 0 || v.dL.raw % 5 != 0)
                throw malformed_decoration("vertex " + std::to_string(v.id) +
                                           ": 3*dL = " + fifths{3 * v.dL.raw}.str() +
                                           " is not a non-negative integer leg count");
            count = 3 * static_cast<int>(v.dL.raw / 5);
        } else if (v.lev == level::l1inf) {
            int edges_to_inf = 0;
            for (const auto& e : g.edges) {
                int other = -1;
                if (e.a == v.id) other = e.b;
                else if (e.b == v.id) other = e.a;
                if (other < 0) continue;
                if (g.find_vertex(other)->lev == level::linf) ++edges_to_inf;
            }
            long long delta = v.dN.raw - edges_to_inf;  // 5 deg N - |E_v /\ E_inf|
            if (delta < 0)
                throw malformed_decoration("vertex " + std::to_string(v.id) + ": delta(v) = " +
                                           std::to_string(delta) + " is negative");
            count = 2 * static_cast<int>(delta);
        }
        aux[v.id] = count;
    }
    return aux;
}

bool quasi_stable(const decorated_graph& g, const std::map<int, int>& aux) {
    std::map<int, int> pos;
    int n = static_cast<int>(g.vertices.size());
    for (int i = 0; i < n; ++i) pos[g.vertices[i].id] = i;

    std::vector<bool> strict_ss(n, false);
    for (int i = 0; i < n; ++i) {
        const auto& v = g.vertices[i];
        int extra = 0;
        if (auto it = aux.find(v.id); it != aux.end()) extra = it->second;
        int excess = 2 * v.genus - 2 + g.valence(v.id) + extra;
        if (excess < 0) return false;
        strict_ss[i] = excess == 0;
    }

    // Strictly semistable vertices may only form chains of at most two, i.e.
    // every component of the induced subgraph has <= 2 vertices.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) {
        int a = pos.at(e.a), b = pos.at(e.b);
        if (a != b && strict_ss[a] && strict_ss[b]) parent[find(a)] = find(b);
    }
    std::map<int, int> comp_size;
    for (int i = 0; i < n; ++i)
        if (strict_ss[i] && ++comp_size[find(i)] > 2) return false;
    return true;
}

long long leg_bound(const numerical_data& data) {
    long long ell = data.ell();
    long long b = ell + 3 * (data.d0.raw / 5) + 2 * data.dinf.raw + 4 * data.g + 2 * ell;
    return std::max(b, ell);
}

namespace {

struct shape_item {
    std::vector<std::pair<level, int>> decor;  // sorted (level, genus) per vertex
};

struct search_caps {
    long long k0_max, k1_max, k1inf_max, kinf_max;
    int v_max;
};

// Rigorous vertex-count caps for quasi-stable output graphs; see the counting
// in the finiteness argument (stable budget + strictly-semistable chains).
search_caps derive_caps(const numerical_data& data, const enum_request& req) {
    long long d0raw = data.d0.raw, dinfraw = data.dinf.raw;
    long long ell = data.ell(), g = data.g;
    long long sstar = std::max<long long>(0, 6 * g + 3 * ell + 3 * (d0raw / 5) + 2 * dinfraw - 2);
    search_caps c;
    // With the auxiliary-leg filter on, 3 dL must be integral, so every
    // level-0/01 vertex carries dL >= 1 and their count is at most d0.
    c.k0_max = req.aux_check ? std::max<long long>(0, d0raw / 5) : std::max<long long>(0, d0raw);
    c.k1_max = std::max<long long>(0, 2 * g - 2 + ell + 3 * (d0raw / 5) + 2 * dinfraw + 2 * sstar);
    c.kinf_max = sstar;
    c.k1inf_max = std::max<long long>(0, dinfraw + sstar);
    long long vb = c.k0_max + c.k1_max + c.kinf_max + c.k1inf_max;
    c.v_max = static_cast<int>(std::min<long long>(vb, 1 << 20));
    if (!req.aux_check) {
        if (!req.max_vertices)
            throw std::invalid_argument("enumeration without the quasi-stability filter needs "
                                        "an explicit max_vertices cap");
        c.v_max = *req.max_vertices;
        c.k1_max = c.kinf_max = c.k1inf_max = c.v_max;
    } else if (req.max_vertices) {
        c.v_max = std::min(c.v_max, *req.max_vertices);
    }
    return c;
}

constexpr level all_levels[5] = {level::l0, level::l01, level::l1, level::l1inf, level::linf};

// Minimal valence a vertex of this decoration can have in a stable graph with
// at least two vertices: level-1 and level-inf rational vertices die to the
// instability cases below valence 3, everything else needs one edge.
int min_valence(level lv, int gv) {
    if (gv == 0 && (lv == level::l1 || lv == level::linf)) return 3;
    return 1;
}

void collect_shapes(const numerical_data& data, const search_caps& caps, bool aux_check,
                    std::vector<shape_item>& items) {
    long long ell = data.ell();
    long long sstar = std::max<long long>(
        0, 6 * data.g + 3 * ell + 3 * (data.d0.raw / 5) + 2 * data.dinf.raw - 2);
    // Only level-0/01, level-1inf and positive-genus vertices may have
    // valence <= 2; everything else needs valence >= 3, and the count of
    // those is capped by the total valence budget.  Hence
    // V <= (2g - 2 + l + cap2) + cap2.
    long long cap2 = (aux_check ? std::max<long long>(0, data.d0.raw / 5)
                                : std::max<long long>(0, data.d0.raw)) +
                     std::max<long long>(0, data.dinf.raw + sstar) + data.g;
    int v_max = caps.v_max;
    if (aux_check)
        v_max = static_cast<int>(
            std::min<long long>(v_max, 2 * data.g - 2 + ell + 2 * cap2 + 2));

    for (int v = 1; v <= v_max; ++v) {
        std::vector<std::pair<level, int>> cur;
        std::function<void(int, int, int, long long)> rec = [&](int pos, int min_key, int gleft,
                                                                long long minval_sum) {
            if (pos == v) {
                long long k0 = 0, k1 = 0, k1inf = 0, k1inf_g0 = 0, kinf = 0, ginf = 0;
                int gsum = 0;
                for (auto& [lv, gv] : cur) {
                    gsum += gv;
                    if (lv == level::l0 || lv == level::l01) ++k0;
                    else if (lv == level::l1) ++k1;
                    else if (lv == level::l1inf) {
                        ++k1inf;
                        if (gv == 0) ++k1inf_g0;
                    } else {
                        ++kinf;
                        ginf += gv;
                    }
                }
                if (k0 > caps.k0_max || k1 > caps.k1_max || k1inf > caps.k1inf_max ||
                    kinf > caps.kinf_max)
                    return;
                if (data.d0.raw > 0 && k0 == 0) return;
                if (data.d0.raw == 0 && k0 > 0) return;
                long long e = data.g - gsum + v - 1;
                if (e < 0 || (v > 1 && e < v - 1) || (v == 1 && e != 0)) return;

                if (v > 1) {
                    long long val_budget = 2 * e + ell;
                    long long others = 0, nonlinf = 0, req3 = 0, gpos = 0;
                    for (auto& [lv, gv] : cur) {
                        if (lv != level::l1inf) others += min_valence(lv, gv);
                        if (lv != level::linf) nonlinf += min_valence(lv, gv);
                        if (gv == 0 && (lv == level::l1 || lv == level::linf)) ++req3;
                        if (gv >= 1) ++gpos;
                    }
                    // Only level-0/01, level-1inf and positive-genus vertices can
                    // sit at valence <= 2; the rest pay >= 1 each into
                    // sum(val - 2) = 2 h1 - 2 + l.
                    if (req3 > 2 * (data.g - gsum) - 2 + ell + (k0 + k1inf + gpos)) return;
                    // Level-inf capacity bound forces 5 sum dN over level 1inf
                    // down to dinf + X with X = sum over inf of (2g-2+|E_v|).
                    long long xmax = 0;
                    if (kinf > 0) {
                        xmax = std::max<long long>(0, 2 * ginf - 2 * kinf + val_budget - nonlinf);
                        if (aux_check) xmax = std::min(xmax, sstar);
                    }
                    if (k1inf > data.dinf.raw + xmax) return;
                    long long oneinf_need = k1inf;
                    if (aux_check) {
                        // delta budget: sum delta = dinf + 2 sum g_inf + 2 h1(C_inf)
                        // - 2r + l_inf; quasi-stability needs val + 2 delta >= 2
                        // on rational level-1inf vertices.
                        long long dmax = data.dinf.raw + 2 * ginf + 2 * (data.g - gsum) + ell -
                                         (kinf > 0 ? 2 : 0);
                        if (k1inf + kinf > 0 && dmax < 0) return;
                        oneinf_need =
                            std::max(oneinf_need, 2 * k1inf_g0 - 2 * std::max<long long>(0, dmax) +
                                                      (k1inf - k1inf_g0));
                    }
                    if (others + oneinf_need > val_budget) return;
                }
                items.push_back({cur});
                return;
            }
            for (int key = min_key; key < 5 * (data.g + 1); ++key) {
                int gv = key / 5;
                if (gv > gleft) break;
                level lv = all_levels[key % 5];
                long long mv = minval_sum + min_valence(lv, gv);
                // Partial LP: remaining vertices add >= 1 valence each while the
                // edge count only shrinks as genus is spent.
                if (v > 1) {
                    long long e_max = data.g - (data.g - gleft) + v - 1;
                    if (mv + (v - pos - 1) > 2 * e_max + ell) continue;
                }
                cur.emplace_back(lv, gv);
                rec(pos + 1, key, gleft - gv, mv);
                cur.pop_back();
            }
        };
        rec(0, 0, data.g, 0);
    }
}

struct candidate_sink {
    const numerical_data& data;
    const enum_request& req;
    long long lmax;
    std::vector<canonical_graph>& out;

    void offer(decorated_graph& g) {
        auto rep = validate_graph(g, data);
        if (!rep.valid() || !rep.warnings.empty()) return;
        if (!is_stable(g, data)) return;
        canonical_graph cg;
        if (req.aux_check) {
            std::map<int, int> aux;
            try {
                aux = auxiliary_legs(g);
            } catch (const malformed_decoration&) {
                return;
            }
            if (!quasi_stable(g, aux)) return;
            long long total_legs = static_cast<long long>(g.legs.size());
            for (auto& [id, n] : aux) total_legs += n;
            if (total_legs > lmax) return;
            if (req.emit_aux_legs) cg.aux = std::move(aux);
        }
        cg.cert = certificate(g);
        cg.graph = g;
        out.push_back(std::move(cg));
    }
};

void assign_degrees(decorated_graph& g, const numerical_data& data,
                    const std::vector<int>& zero_side, const std::vector<int>& oneinf_side,
                    candidate_sink& sink) {
    // Level-inf degrees are forced by the valence formula.
    long long linf_sum = 0;
    for (auto& v : g.vertices) {
        if (v.lev == level::linf) {
            v.dN = fifths{2 - 2 * v.genus - g.valence(v.id)};
            v.dL = -v.dN;
            linf_sum += v.dN.raw;
        } else if (v.lev == level::l1) {
            v.dL = v.dN = fifths{0};
        }
    }

    // Compositions of d0 (in fifths) over the level-0/01 vertices, then of
    // the remaining dinf over the level-1inf vertices, all parts positive.
    long long residual_1inf = data.dinf.raw - linf_sum;
    std::function<void(std::size_t, long long)> rec_1inf = [&](std::size_t i, long long left) {
        if (i == oneinf_side.size()) {
            if (left == 0) sink.offer(g);
            return;
        }
        long long max_part = left - static_cast<long long>(oneinf_side.size() - 1 - i);
        for (long long part = 1; part <= max_part; ++part) {
            g.vertices[oneinf_side[i]].dN = fifths{part};
            g.vertices[oneinf_side[i]].dL = fifths{-part};
            rec_1inf(i + 1, left - part);
        }
    };
    auto start_1inf = [&]() {
        if (oneinf_side.empty()) {
            if (residual_1inf == 0) sink.offer(g);
        } else if (residual_1inf >= static_cast<long long>(oneinf_side.size())) {
            rec_1inf(0, residual_1inf);
        }
    };

    std::function<void(std::size_t, long long)> rec_zero = [&](std::size_t i, long long left) {
        if (i == zero_side.size()) {
            if (left == 0) start_1inf();
            return;
        }
        long long max_part = left - static_cast<long long>(zero_side.size() - 1 - i);
        for (long long part = 1; part <= max_part; ++part) {
            g.vertices[zero_side[i]].dL = fifths{part};
            g.vertices[zero_side[i]].dN = fifths{0};
            rec_zero(i + 1, left - part);
        }
    };
    if (zero_side.empty()) {
        if (data.d0.raw == 0) start_1inf();
    } else if (data.d0.raw >= static_cast<long long>(zero_side.size())) {
        rec_zero(0, data.d0.raw);
    }
}

void process_item(const shape_item& item, const numerical_data& data, const enum_request& req,
                  long long lmax, std::vector<canonical_graph>& out) {
    int v = static_cast<int>(item.decor.size());
    decorated_graph g;
    for (int i = 0; i < v; ++i)
        g.vertices.push_back(vertex{i, item.decor[i].second, item.decor[i].first, fifths{}, fifths{}});

    std::vector<int> zero_side, oneinf_side;
    for (int i = 0; i < v; ++i) {
        if (item.decor[i].first == level::l0 || item.decor[i].first == level::l01)
            zero_side.push_back(i);
        else if (item.decor[i].first == level::l1inf)
            oneinf_side.push_back(i);
    }

    int gsum = 0;
    for (auto& [lv, gv] : item.decor) gsum += gv;
    int e_count = data.g - gsum + v - 1;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (levels_may_meet(item.decor[i].first, item.decor[j].first)) pairs.emplace_back(i, j);

    candidate_sink sink{data, req, lmax, out};

    auto with_edges = [&]() {
        // Marking assignments, in gamma order.
        std::function<void(std::size_t)> rec_legs = [&](std::size_t k) {
            if (k == data.gamma.size()) {
                assign_degrees(g, data, zero_side, oneinf_side, sink);
                return;
            }
            for (int i = 0; i < v; ++i) {
                level lv = item.decor[i].first;
                if (data.gamma[k] == monodromy::rho1 && lv == level::linf) continue;
                if (data.gamma[k] == monodromy::phi1 && lv == level::l0) continue;
                g.legs.push_back(leg{i, false, data.gamma[k], std::nullopt});
                rec_legs(k + 1);
                g.legs.pop_back();
            }
        };
        rec_legs(0);
    };

    // Edge multisets over allowed pairs, with a union-find connectivity prune.
    std::vector<int> uf(v);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    std::function<void(std::size_t, int, int)> rec_edges = [&](std::size_t pi, int left, int comps) {
        if (comps - 1 > left) return;  // cannot connect any more
        if (left == 0) {
            if (comps == 1) with_edges();
            return;
        }
        if (pi == pairs.size()) return;
        // Take 0..left copies of pairs[pi].
        rec_edges(pi + 1, left, comps);
        auto saved_uf = uf;
        int merged_comps = comps;
        int ra = find(pairs[pi].first), rb = find(pairs[pi].second);
        if (ra != rb) {
            uf[ra] = rb;
            --merged_comps;
        }
        for (int copies = 1; copies <= left; ++copies) {
            g.edges.push_back(edge{pairs[pi].first, pairs[pi].second, std::nullopt});
            rec_edges(pi + 1, left - copies, merged_comps);
        }
        for (int copies = 1; copies <= left; ++copies) g.edges.pop_back();
        uf = saved_uf;
    };
    std::iota(uf.begin(), uf.end(), 0);
    rec_edges(0, e_count, v);
}

}  // namespace

enum_result enumerate_theta(const enum_request& req) {
    auto rep = validate_numerical(req.data);
    if (!rep.valid()) throw invalid_data(std::move(rep));

    enum_result result;
    result.bound_used = leg_bound(req.data);
    if (req.data.d0.raw < 0) return result;  // sum of positive dL can never be negative

    search_caps caps = derive_caps(req.data, req);
    std::vector<shape_item> items;
    collect_shapes(req.data, caps, req.aux_check, items);

    std::uint64_t first = std::min<std::uint64_t>(req.resume_from_item, items.size());
    std::uint64_t last = items.size();
    bool truncated = false;
    if (req.work_cap > 0 && last - first > req.work_cap) {
        last = first + req.work_cap;
        truncated = true;
    }

    std::vector<std::vector<canonical_graph>> per_item(last - first);
    auto run = [&](std::uint64_t i) {
        process_item(items[first + i], req.data, req, result.bound_used, per_item[i]);
    };
#ifdef _OPENMP
    if (req.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(req.jobs)
        for (long long i = 0; i < static_cast<long long>(last - first); ++i)
            run(static_cast<std::uint64_t>(i));
    } else
#endif
    {
        for (std::uint64_t i = 0; i < last - first; ++i) run(i);
    }

    for (auto& bucket : per_item)
        for (auto& cg : bucket) result.graphs.push_back(std::move(cg));
    std::sort(result.graphs.begin(), result.graphs.end(),
              [](const auto& a, const auto& b) { return a.cert < b.cert; });
    result.graphs.erase(std::unique(result.graphs.begin(), result.graphs.end(),
                                    [](const auto& a, const auto& b) { return a.cert == b.cert; }),
                        result.graphs.end());
    result.items_processed = last - first;

    if (truncated) throw enum_cap_exceeded(std::move(result), last);
    return result;
}

enum_result brute_force_theta(const numerical_data& data, int max_vertices, bool aux_check) {
    enum_result result;
    result.bound_used = leg_bound(data);
    std::map<std::string, canonical_graph> seen;

    for (int v = 1; v <= max_vertices; ++v) {
        std::vector<level> lv(v);
        std::function<void(int)> rec_levels = [&](int i) {
            if (i == v) {
                long long k0 = 0;
                for (auto l : lv)
                    if (l == level::l0 || l == level::l01) ++k0;
                if (data.d0.raw > 0 && (k0 == 0 || k0 > data.d0.raw)) return;
                if (data.d0.raw <= 0 && k0 > 0) return;

                std::vector<int> gv(v);
                std::function<void(int, int)> rec_genus = [&](int j, int gleft) {
                    if (j == v) {
                        int gsum = data.g - gleft;
                        int e_count = data.g - gsum + v - 1;
                        if (e_count < 0 || (v > 1 && e_count < v - 1) || (v == 1 && e_count != 0))
                            return;

                        decorated_graph g;
                        for (int t = 0; t < v; ++t)
                            g.vertices.push_back(vertex{t, gv[t], lv[t], fifths{}, fifths{}});
                        std::vector<std::pair<int, int>> pairs;
                        for (int a = 0; a < v; ++a)
                            for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);

                        std::function<void(std::size_t, int)> rec_edges = [&](std::size_t pi,
                                                                              int left) {
                            if (left == 0) {
                                if (!g.connected()) return;
                                std::function<void(std::size_t)> rec_legs = [&](std::size_t k) {
                                    if (k == data.gamma.size()) {
                                        // Flat per-vertex degree boxes; every sum
                                        // constraint is left to validate_graph.
                                        std::function<void(int)> rec_deg = [&](int t) {
                                            if (t == v) {
                                                auto rep = validate_graph(g, data);
                                                if (!rep.valid() || !rep.warnings.empty()) return;
                                                if (!is_stable(g, data)) return;
                                                canonical_graph cg;
                                                if (aux_check) {
                                                    std::map<int, int> aux;
                                                    try {
                                                        aux = auxiliary_legs(g);
                                                    } catch (const malformed_decoration&) {
                                                        return;
                                                    }
                                                    if (!quasi_stable(g, aux)) return;
                                                }
                                                cg.cert = certificate(g);
                                                cg.graph = g;
                                                seen.emplace(cg.cert, std::move(cg));
                                                return;
                                            }
                                            auto& vx = g.vertices[t];
                                            switch (lv[t]) {
                                                case level::l1:
                                                    vx.dL = vx.dN = fifths{0};
                                                    rec_deg(t + 1);
                                                    break;
                                                case level::linf:
                                                    vx.dN = fifths{2 - 2 * gv[t] -
                                                                   g.valence(vx.id)};
                                                    vx.dL = -vx.dN;
                                                    rec_deg(t + 1);
                                                    break;
                                                case level::l0:
                                                case level::l01:
                                                    for (long long r = 1; r <= data.d0.raw; ++r) {
                                                        vx.dL = fifths{r};
                                                        vx.dN = fifths{0};
                                                        rec_deg(t + 1);
                                                    }
                                                    break;
                                                case level::l1inf: {
                                                    long long cap =
                                                        data.dinf.raw + 2 * data.g +
                                                        2 * static_cast<long long>(g.edges.size()) +
                                                        data.ell();
                                                    for (long long r = 1; r <= cap; ++r) {
                                                        vx.dN = fifths{r};
                                                        vx.dL = fifths{-r};
                                                        rec_deg(t + 1);
                                                    }
                                                    break;
                                                }
                                            }
                                        };
                                        rec_deg(0);
                                        return;
                                    }
                                    for (int t = 0; t < v; ++t) {
                                        g.legs.push_back(leg{t, false, data.gamma[k], std::nullopt});
                                        rec_legs(k + 1);
                                        g.legs.pop_back();
                                    }
                                };
                                rec_legs(0);
                                return;
                            }
                            if (pi == pairs.size()) return;
                            rec_edges(pi + 1, left);
                            for (int copies = 1; copies <= left; ++copies) {
                                g.edges.push_back(
                                    edge{pairs[pi].first, pairs[pi].second, std::nullopt});
                                rec_edges(pi + 1, left - copies);
                            }
                            for (int copies = 1; copies <= left; ++copies) g.edges.pop_back();
                        };
                        rec_edges(0, e_count);
                        return;
                    }
                    for (int gg = 0; gg <= gleft; ++gg) {
                        gv[j] = gg;
                        rec_genus(j + 1, gleft - gg);
                    }
                };
                rec_genus(0, data.g);
                return;
            }
            for (level l : all_levels) {
                lv[i] = l;
                rec_levels(i + 1);
            }
        };
        rec_levels(0);
    }

    for (auto& [cert, cg] : seen) result.graphs.push_back(std::move(cg));
    return result;
}

}  // namespace mspkit
