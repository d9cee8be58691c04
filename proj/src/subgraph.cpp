#include "graphlim/subgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace graphlim {

namespace {

struct InducedSearch {
    const Graph& h;
    const Graph& g;
    std::vector<int> order;   // pattern vertices, most-constrained first
    std::vector<int> map;     // pattern vertex -> host vertex or -1
    std::vector<char> used;   // host vertex used

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int hv = order[depth];
        for (int gv = 0; gv < g.n(); ++gv) {
            if (used[gv]) continue;
            if (h.degree(hv) > g.degree(gv)) continue;
            bool ok = true;
            for (size_t d = 0; d < depth; ++d) {
                int hu = order[d];
                if (h.has_edge(hu, hv) != g.has_edge(map[hu], gv)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[hv] = gv;
            used[gv] = 1;
            if (extend(depth + 1)) return true;
            used[gv] = 0;
            map[hv] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> contains_induced(const Graph& h, const Graph& g) {
    if (h.n() > 15)
        throw std::invalid_argument("contains_induced is exact only for patterns with <= 15 vertices");
    if (h.n() > g.n()) return std::nullopt;
    if (h.n() == 0) return std::vector<int>{};

    InducedSearch s{h, g, {}, std::vector<int>(h.n(), -1), std::vector<char>(g.n(), 0)};
    // order pattern vertices so each new vertex is adjacent to an already
    // placed one when possible, breaking ties by descending degree
    std::vector<char> placed(h.n(), 0);
    for (int step = 0; step < h.n(); ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < h.n(); ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : s.order)
                if (h.has_edge(u, v)) ++conn;
            if (conn > best_conn || (conn == best_conn && h.degree(v) > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = h.degree(v);
            }
        }
        s.order.push_back(best);
        placed[best] = 1;
    }
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

std::optional<VertexPartition> membership_cts(const Graph& g, int t, int s) {
    if (s < 0 || t < s) throw std::invalid_argument("membership_cts needs 0 <= s <= t");
    if (g.n() > 20)
        throw std::invalid_argument("membership_cts is exact only for <= 20 vertices");

    const int n = g.n();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts(t);

    // assign vertices in descending-degree order; clique parts demand
    // adjacency, independent parts demand non-adjacency
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    auto fits = [&](int v, int p) {
        bool clique = p < s;
        for (int u : parts[p])
            if (g.has_edge(u, v) != clique) return false;
        return true;
    };

    std::vector<int> result;
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        bool tried_empty_clique = false, tried_empty_indep = false;
        for (int p = 0; p < t; ++p) {
            // identical empty parts of the same type are interchangeable
            if (parts[p].empty()) {
                bool& flag = (p < s) ? tried_empty_clique : tried_empty_indep;
                if (flag) continue;
                flag = true;
            }
            if (!fits(v, p)) continue;
            parts[p].push_back(v);
            if (rec(idx + 1)) return true;
            parts[p].pop_back();
        }
        return false;
    };

    if (!rec(0)) return std::nullopt;

    VertexPartition vp;
    vp.n = n;
    vp.parts = parts;
    for (auto& part : vp.parts) std::sort(part.begin(), part.end());
    return vp;
}

} // namespace graphlim
