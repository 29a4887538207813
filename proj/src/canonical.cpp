#include "mspkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mspkit {

namespace {

struct canon_ctx {
    const decorated_graph& g;
    int n;
    std::vector<int> ids;                       // position -> vertex id
    std::map<int, int> pos;                     // vertex id -> position
    std::vector<std::string> base;              // per-position invariant
    std::vector<std::vector<std::string>> adj;  // symmetric: sorted edge marks per pair
    std::vector<std::string> self;              // self-loop marks per position

    explicit canon_ctx(const decorated_graph& gr) : g(gr), n(static_cast<int>(gr.vertices.size())) {
        ids.reserve(n);
        for (const auto& v : g.vertices) ids.push_back(v.id);
        std::sort(ids.begin(), ids.end());
        for (int i = 0; i < n; ++i) pos[ids[i]] = i;

        std::vector<std::vector<std::string>> legrec(n);
        int mark = 0;
        for (const auto& l : g.legs) {
            std::ostringstream os;
            if (l.is_node)
                os << "n" << (l.node_stacky ? std::to_string(*l.node_stacky) : "-");
            else
                os << "m" << mark++ << ":" << monodromy_name(l.gamma);
            legrec[pos.at(l.v)].push_back(os.str());
        }
        base.resize(n);
        for (const auto& v : g.vertices) {
            int p = pos.at(v.id);
            std::sort(legrec[p].begin(), legrec[p].end());
            std::ostringstream os;
            os << level_name(v.lev) << "," << v.genus << "," << v.dL.raw << "," << v.dN.raw << ",[";
            for (const auto& s : legrec[p]) os << s << ";";
            os << "]";
            base[p] = os.str();
        }

        adj.assign(n, std::vector<std::string>(n));
        self.assign(n, "");
        std::vector<std::vector<std::vector<std::string>>> marks(n,
                                                                 std::vector<std::vector<std::string>>(n));
        std::vector<std::vector<std::string>> selfmarks(n);
        for (const auto& e : g.edges) {
            int a = pos.at(e.a), b = pos.at(e.b);
            std::string m = e.stacky ? std::to_string(*e.stacky) : "-";
            if (a == b) {
                selfmarks[a].push_back(m);
            } else {
                marks[a][b].push_back(m);
                marks[b][a].push_back(m);
            }
        }
        for (int i = 0; i < n; ++i) {
            std::sort(selfmarks[i].begin(), selfmarks[i].end());
            for (const auto& m : selfmarks[i]) self[i] += m + ",";
            for (int j = 0; j < n; ++j) {
                std::sort(marks[i][j].begin(), marks[i][j].end());
                for (const auto& m : marks[i][j]) adj[i][j] += m + ",";
            }
        }
    }

    // Iterated refinement of the vertex coloring by neighborhood multisets.
    std::vector<std::string> refined_colors() const {
        std::vector<std::string> color = base;
        for (int round = 0; round < n; ++round) {
            std::vector<std::string> next(n);
            for (int i = 0; i < n; ++i) {
                std::vector<std::string> nb;
                for (int j = 0; j < n; ++j)
                    if (!adj[i][j].empty()) nb.push_back(adj[i][j] + "@" + color[j]);
                std::sort(nb.begin(), nb.end());
                std::ostringstream os;
                os << color[i] << "/" << self[i] << "{";
                for (const auto& s : nb) os << s << "|";
                os << "}";
                next[i] = os.str();
            }
            if (next == color) break;
            color = std::move(next);
        }
        return color;
    }

    std::string encode(const std::vector<int>& order) const {
        std::ostringstream os;
        for (int i = 0; i < n; ++i) os << base[order[i]] << "!" << self[order[i]] << "#";
        os << "|";
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) os << adj[order[i]][order[j]] << ";";
        return os.str();
    }
};

void best_order(const canon_ctx& ctx, std::vector<std::vector<int>>& classes, std::size_t ci,
                std::vector<int>& order, std::string& best) {
    if (ci == classes.size()) {
        std::string enc = ctx.encode(order);
        if (best.empty() || enc < best) best = std::move(enc);
        return;
    }
    auto& cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
        std::size_t sz = order.size();
        order.insert(order.end(), cls.begin(), cls.end());
        best_order(ctx, classes, ci + 1, order, best);
        order.resize(sz);
    } while (std::next_permutation(cls.begin(), cls.end()));
}

}  // namespace

std::string certificate(const decorated_graph& g) {
    if (g.vertices.empty()) return "<empty>";
    canon_ctx ctx(g);
    auto colors = ctx.refined_colors();

    std::map<std::string, std::vector<int>> by_color;
    for (int i = 0; i < ctx.n; ++i) by_color[colors[i]].push_back(i);
    std::vector<std::vector<int>> classes;
    classes.reserve(by_color.size());
    for (auto& [c, members] : by_color) classes.push_back(members);

    std::vector<int> order;
    order.reserve(ctx.n);
    std::string best;
    best_order(ctx, classes, 0, order, best);
    return best;
}

}  // namespace mspkit
