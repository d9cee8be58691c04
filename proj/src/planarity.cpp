#include "graphlim/planarity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace graphlim {

namespace {

// ---- biconnected components ------------------------------------------

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph) : g(graph), disc(graph.n(), -1), low(graph.n(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v = 0; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            if (disc[v] == -1) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // pop one block
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void run() {
        for (int v = 0; v < g.n(); ++v)
            if (disc[v] == -1) dfs(v, -1);
    }
};

// ---- Demoucron's algorithm on a biconnected block ---------------------

struct Demoucron {
    int n;
    std::vector<std::vector<char>> adj;       // block adjacency
    std::vector<std::vector<char>> embedded;  // embedded edges
    std::vector<char> in_embedded;            // vertex already placed
    std::vector<std::vector<int>> faces;      // boundary cycles

    bool edge_done(int u, int v) const { return embedded[u][v]; }

    // bridges of the embedded subgraph: chords and attached components
    struct Bridge {
        std::vector<int> attachments;              // on embedded vertices
        std::vector<std::pair<int, int>> edges;    // all its edges
        std::vector<int> inner;                    // non-embedded vertices
    };

    std::vector<Bridge> bridges() const {
        std::vector<Bridge> out;
        // chord bridges: single unembedded edges between embedded vertices
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v] && !embedded[u][v] && in_embedded[u] && in_embedded[v]) {
                    Bridge b;
                    b.attachments = {u, v};
                    b.edges = {{u, v}};
                    out.push_back(std::move(b));
                }
        // component bridges
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int v0 = 0; v0 < n; ++v0) {
            if (in_embedded[v0] || comp[v0] != -1) continue;
            std::vector<int> stack{v0};
            comp[v0] = nc;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0; v < n; ++v) {
                    if (!adj[u][v] || in_embedded[v] || comp[v] != -1) continue;
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
            ++nc;
        }
        std::vector<Bridge> comp_bridges(nc);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!adj[u][v]) continue;
                int cu = in_embedded[u] ? -1 : comp[u];
                int cv = in_embedded[v] ? -1 : comp[v];
                if (cu == -1 && cv == -1) continue;
                int c = cu == -1 ? cv : cu;
                comp_bridges[c].edges.emplace_back(u, v);
                if (cu == -1) comp_bridges[c].attachments.push_back(u);
                if (cv == -1) comp_bridges[c].attachments.push_back(v);
            }
        }
        for (int c = 0; c < nc; ++c) {
            auto& b = comp_bridges[c];
            if (b.edges.empty()) continue;
            std::sort(b.attachments.begin(), b.attachments.end());
            b.attachments.erase(std::unique(b.attachments.begin(), b.attachments.end()),
                                b.attachments.end());
            for (int v = 0; v < n; ++v)
                if (!in_embedded[v] && comp[v] == c) b.inner.push_back(v);
            out.push_back(std::move(b));
        }
        return out;
    }

    bool face_admits(const std::vector<int>& face, const std::vector<int>& att) const {
        for (int a : att)
            if (std::find(face.begin(), face.end(), a) == face.end()) return false;
        return true;
    }

    // alpha-path between two attachments through the bridge interior
    std::vector<int> bridge_path(const Bridge& b) const {
        if (b.inner.empty()) return {b.edges[0].first, b.edges[0].second};
        // BFS from one attachment through interior vertices until another
        // attachment is reached
        int src = b.attachments[0];
        std::vector<int> prev(n, -2);
        std::vector<int> queue{src};
        prev[src] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (in_embedded[u] && u != src) continue; // attachments are endpoints only
            for (auto [a, c] : b.edges) {
                int v = -1;
                if (a == u) v = c;
                else if (c == u) v = a;
                if (v == -1 || prev[v] != -2) continue;
                prev[v] = u;
                if (in_embedded[v]) {
                    std::vector<int> path;
                    for (int x = v; x != -1; x = prev[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(v);
            }
        }
        return {};
    }

    void embed_path(const std::vector<int>& path, size_t face_idx) {
        auto face = faces[face_idx];
        faces.erase(faces.begin() + static_cast<long>(face_idx));
        int u = path.front(), v = path.back();
        auto pu = std::find(face.begin(), face.end(), u) - face.begin();
        // walk the cycle from u to v in both directions
        auto walk = [&](int dir) {
            std::vector<int> arc;
            long idx = pu;
            long len = static_cast<long>(face.size());
            while (true) {
                arc.push_back(face[static_cast<size_t>(idx)]);
                if (face[static_cast<size_t>(idx)] == v && arc.size() > 1) break;
                idx = ((idx + dir) % len + len) % len;
                if (arc.size() > face.size() + 1) break; // v not found: degenerate
            }
            return arc;
        };
        std::vector<int> arc1 = walk(+1);
        std::vector<int> arc2 = walk(-1);

        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        auto make_face = [&](std::vector<int> arc) {
            // arc runs u..v; append reversed path interior v..u side
            std::vector<int> f = arc;
            for (auto it = interior.rbegin(); it != interior.rend(); ++it) f.push_back(*it);
            return f;
        };
        faces.push_back(make_face(arc1));
        faces.push_back(make_face(arc2));

        for (size_t i = 0; i + 1 < path.size(); ++i) {
            embedded[path[i]][path[i + 1]] = embedded[path[i + 1]][path[i]] = 1;
        }
        for (int x : path) in_embedded[x] = 1;
    }

    bool run() {
        // find any cycle via DFS
        std::vector<int> parent(n, -1), color(n, 0), cyc;
        std::function<bool(int)> dfs = [&](int u) -> bool {
            color[u] = 1;
            for (int v = 0; v < n; ++v) {
                if (!adj[u][v] || v == parent[u]) continue;
                if (color[v] == 1) {
                    // back edge u->v closes a cycle
                    cyc.push_back(u);
                    for (int x = u; x != v; x = parent[x]) cyc.push_back(parent[x]);
                    return true;
                }
                if (color[v] == 0) {
                    parent[v] = u;
                    if (dfs(v)) return true;
                }
            }
            color[u] = 2;
            return false;
        };
        bool found = false;
        for (int v = 0; v < n && !found; ++v)
            if (color[v] == 0) found = dfs(v);
        if (!found) return true; // forest: planar

        faces.push_back(cyc);
        faces.push_back(cyc);
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            embedded[a][b] = embedded[b][a] = 1;
            in_embedded[a] = 1;
        }

        while (true) {
            auto bs = bridges();
            if (bs.empty()) return true;
            // pick the bridge with the fewest admissible faces
            int best = -1;
            size_t best_count = 0;
            size_t best_face = 0;
            for (size_t i = 0; i < bs.size(); ++i) {
                size_t count = 0, first_face = 0;
                for (size_t f = 0; f < faces.size(); ++f) {
                    if (face_admits(faces[f], bs[i].attachments)) {
                        if (count == 0) first_face = f;
                        ++count;
                    }
                }
                if (count == 0) return false; // some bridge fits nowhere
                if (best == -1 || count < best_count) {
                    best = static_cast<int>(i);
                    best_count = count;
                    best_face = first_face;
                }
            }
            auto path = bridge_path(bs[static_cast<size_t>(best)]);
            if (path.size() < 2) return false; // defensive: malformed bridge
            embed_path(path, best_face);
        }
    }
};

bool block_planar(const Graph& g, const std::vector<std::pair<int, int>>& block_edges) {
    if (block_edges.size() <= 2) return true;
    std::vector<int> verts;
    for (auto [u, v] : block_edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int n = static_cast<int>(verts.size());
    const long long m = static_cast<long long>(block_edges.size());
    if (n >= 3 && m > 3ll * n - 6) return false;

    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < n; ++i) local[verts[static_cast<size_t>(i)]] = i;

    Demoucron d;
    d.n = n;
    d.adj.assign(n, std::vector<char>(n, 0));
    d.embedded.assign(n, std::vector<char>(n, 0));
    d.in_embedded.assign(n, 0);
    for (auto [u, v] : block_edges) d.adj[local[u]][local[v]] = d.adj[local[v]][local[u]] = 1;
    return d.run();
}

} // namespace

bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    BlockFinder bf(g);
    bf.run();
    for (const auto& block : bf.blocks)
        if (!block_planar(g, block)) return false;
    return true;
}

bool is_outerplanar(const Graph& g) {
    Graph apex(g.n() + 1);
    for (auto [u, v] : g.edges()) apex.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) apex.add_edge(g.n(), v);
    return is_planar(apex);
}

} // namespace graphlim
