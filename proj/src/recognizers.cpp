#include "graphlim/recognizers.hpp"
#include "graphlim/planarity.hpp"
#include "graphlim/subgraph.hpp"
#include "graphlim/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace graphlim {

namespace {

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int v0 = 0; v0 < g.n(); ++v0) {
        if (comp[static_cast<size_t>(v0)] != -1) continue;
        std::vector<int> stack{v0}, here;
        comp[static_cast<size_t>(v0)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            here.push_back(u);
            for (int v = 0; v < g.n(); ++v)
                if (g.has_edge(u, v) && comp[static_cast<size_t>(v)] == -1) {
                    comp[static_cast<size_t>(v)] = static_cast<int>(out.size());
                    stack.push_back(v);
                }
        }
        std::sort(here.begin(), here.end());
        out.push_back(std::move(here));
    }
    return out;
}

} // namespace

ClassEvidence is_two_clique(const Graph& g) {
    ClassEvidence ev;
    ev.method = "components-are-cliques";
    auto comps = components(g);

    // a non-clique component yields an induced P_3 via a BFS layer pair
    for (const auto& c : comps) {
        if (is_clique(g, c)) continue;
        for (int u : c) {
            for (int v : c) {
                if (u >= v || g.has_edge(u, v)) continue;
                for (int w : c) {
                    if (w == u || w == v) continue;
                    if (g.has_edge(u, w) && g.has_edge(w, v)) {
                        ev.verdict = Verdict::non_member;
                        ev.forbidden_name = "P_3";
                        ev.forbidden_embedding = std::vector<int>{u, w, v};
                        return ev;
                    }
                }
            }
        }
    }
    if (comps.size() > 2) {
        ev.verdict = Verdict::non_member;
        ev.forbidden_name = "3K_1";
        ev.forbidden_embedding = std::vector<int>{comps[0][0], comps[1][0], comps[2][0]};
        return ev;
    }

    ev.verdict = Verdict::member;
    VertexPartition p;
    p.n = g.n();
    p.parts.resize(2);
    if (!comps.empty()) p.parts[0] = comps[0];
    if (comps.size() > 1) p.parts[1] = comps[1];
    ev.partition = std::move(p);
    return ev;
}

// ---- transitive orientation -------------------------------------------

namespace {

struct OrientSearch {
    const Graph& g;
    int n;
    // orient[u*n+v]: 0 unknown, 1 committed u->v
    std::vector<char> fwd;

    explicit OrientSearch(const Graph& graph) : g(graph), n(graph.n()), fwd(static_cast<size_t>(n) * n, 0) {}

    bool oriented(int u, int v) const { return fwd[static_cast<size_t>(u) * n + v] || fwd[static_cast<size_t>(v) * n + u]; }
    bool dir(int u, int v) const { return fwd[static_cast<size_t>(u) * n + v]; }

    // commit u->v and propagate; returns false on contradiction.
    // trail records commits for backtracking.
    bool commit(int u, int v, std::vector<std::pair<int, int>>& trail) {
        if (dir(v, u)) return false;
        if (dir(u, v)) return true;
        fwd[static_cast<size_t>(u) * n + v] = 1;
        trail.emplace_back(u, v);

        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            bool uw = g.has_edge(u, w), vw = g.has_edge(v, w);
            // committed chains must close transitively
            if (dir(v, w)) {
                if (!uw) return false;
                if (!commit(u, w, trail)) return false;
            }
            if (dir(w, u)) {
                if (!vw) return false;
                if (!commit(w, v, trail)) return false;
            }
            // forcing through missing edges
            if (!uw && vw) {
                if (!commit(w, v, trail)) return false;
            }
            if (uw && !vw) {
                if (!commit(u, w, trail)) return false;
            }
        }
        return true;
    }

    void undo(std::vector<std::pair<int, int>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [u, v] = trail.back();
            trail.pop_back();
            fwd[static_cast<size_t>(u) * n + v] = 0;
        }
    }

    bool solve(std::vector<std::pair<int, int>>& trail) {
        int bu = -1, bv = -1;
        for (int u = 0; u < n && bu == -1; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) && !oriented(u, v)) {
                    bu = u;
                    bv = v;
                    break;
                }
        if (bu == -1) return true;
        for (int flip = 0; flip < 2; ++flip) {
            size_t mark = trail.size();
            int a = flip ? bv : bu, b = flip ? bu : bv;
            if (commit(a, b, trail) && solve(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

} // namespace

bool audit_transitive_orientation(const Graph& g, const std::vector<std::pair<int, int>>& orient) {
    const int n = g.n();
    std::vector<char> fwd(static_cast<size_t>(n) * n, 0);
    long long m = 0;
    for (auto [u, v] : orient) {
        if (!g.has_edge(u, v)) return false;
        if (fwd[static_cast<size_t>(u) * n + v] || fwd[static_cast<size_t>(v) * n + u]) return false;
        fwd[static_cast<size_t>(u) * n + v] = 1;
        ++m;
    }
    if (m != g.edge_count()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!fwd[static_cast<size_t>(a) * n + b]) continue;
            for (int c = 0; c < n; ++c)
                if (fwd[static_cast<size_t>(b) * n + c] && !fwd[static_cast<size_t>(a) * n + c]) return false;
        }
    return true;
}

ClassEvidence is_comparability(const Graph& g) {
    ClassEvidence ev;
    if (g.n() > 12) {
        ev.verdict = Verdict::unknown;
        ev.method = "envelope-exceeded";
        return ev;
    }
    OrientSearch s(g);
    std::vector<std::pair<int, int>> trail;
    if (s.solve(trail)) {
        std::vector<std::pair<int, int>> orient;
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (s.dir(u, v)) orient.emplace_back(u, v);
        if (!audit_transitive_orientation(g, orient))
            throw std::logic_error("orientation search returned a non-transitive orientation");
        ev.verdict = Verdict::member;
        ev.method = "forcing-backtracking";
        ev.orientation = std::move(orient);
    } else {
        ev.verdict = Verdict::non_member;
        ev.method = "exhausted-forcing-backtracking";
    }
    return ev;
}

ClassEvidence is_incomparability(const Graph& g) {
    ClassEvidence ev = is_comparability(complement(g));
    ev.method += "-on-complement";
    return ev;
}

bool comparability_brute_force(const Graph& g) {
    auto edges = g.edges();
    const size_t m = edges.size();
    if (m > 25) throw std::invalid_argument("comparability_brute_force oracle limited to 25 edges");
    const int n = g.n();
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<char> fwd(static_cast<size_t>(n) * n, 0);
        for (size_t e = 0; e < m; ++e) {
            auto [u, v] = edges[e];
            if (mask & (1ull << e)) fwd[static_cast<size_t>(u) * n + v] = 1;
            else fwd[static_cast<size_t>(v) * n + u] = 1;
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (!fwd[static_cast<size_t>(a) * n + b]) continue;
                for (int c = 0; c < n; ++c)
                    if (fwd[static_cast<size_t>(b) * n + c] && !fwd[static_cast<size_t>(a) * n + c]) {
                        ok = false;
                        break;
                    }
            }
        if (ok) return true;
    }
    return false;
}

// ---- clique coverings --------------------------------------------------

bool audit_clique_cover(const Graph& g, const VertexPartition& p, CoverTarget target, int max_parts) {
    if (p.n != g.n()) return false;
    try {
        p.validate();
    } catch (const std::exception&) {
        return false;
    }
    for (const auto& part : p.parts)
        if (!is_clique(g, part)) return false;
    Graph q = quotient(g, p);
    switch (target) {
    case CoverTarget::planar_quotient: return is_planar(q);
    case CoverTarget::outerplanar_quotient: return is_outerplanar(q);
    case CoverTarget::max_parts: return static_cast<int>(p.parts.size()) <= max_parts;
    }
    return false;
}

namespace {

std::optional<VertexPartition> exhaustive_cover_search(const Graph& g, CoverTarget target, int max_parts) {
    const int n = g.n();
    std::vector<std::vector<int>> parts;

    std::function<std::optional<VertexPartition>(int)> rec =
        [&](int v) -> std::optional<VertexPartition> {
        if (v == n) {
            VertexPartition p;
            p.n = n;
            p.parts = parts;
            if (audit_clique_cover(g, p, target, max_parts)) return p;
            return std::nullopt;
        }
        // existing parts first (restricted-growth order); recursion can
        // reallocate `parts`, so index rather than hold references
        for (size_t pi = 0; pi < parts.size(); ++pi) {
            bool fits = true;
            for (int u : parts[pi])
                if (!g.has_edge(u, v)) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            parts[pi].push_back(v);
            if (auto r = rec(v + 1)) return r;
            parts[pi].pop_back();
        }
        if (target != CoverTarget::max_parts || static_cast<int>(parts.size()) < max_parts) {
            parts.push_back({v});
            if (auto r = rec(v + 1)) return r;
            parts.pop_back();
        }
        return std::nullopt;
    };
    return rec(0);
}

std::optional<VertexPartition> greedy_cover_search(const Graph& g, CoverTarget target, int max_parts,
                                                   int restarts) {
    const int n = g.n();
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        // deterministic seeded shuffle
        for (int i = n - 1; i > 0; --i) {
            uint64_t r = CounterRng::at(0x9c0ffeeull, static_cast<uint64_t>(attempt), static_cast<uint64_t>(i));
            std::swap(order[static_cast<size_t>(i)], order[r % static_cast<uint64_t>(i + 1)]);
        }
        std::vector<std::vector<int>> parts;
        for (int v : order) {
            bool placed = false;
            for (auto& part : parts) {
                bool fits = true;
                for (int u : part)
                    if (!g.has_edge(u, v)) {
                        fits = false;
                        break;
                    }
                if (fits) {
                    part.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) parts.push_back({v});
        }
        VertexPartition p;
        p.n = n;
        p.parts = parts;
        if (audit_clique_cover(g, p, target, max_parts)) return p;
    }
    return std::nullopt;
}

} // namespace

ClassEvidence find_clique_cover_with(const Graph& g, CoverTarget target, int max_parts,
                                     const std::optional<VertexPartition>& hint) {
    if (target == CoverTarget::max_parts && max_parts < 0)
        throw std::invalid_argument("max_parts must be non-negative");
    ClassEvidence ev;

    if (hint) {
        if (audit_clique_cover(g, *hint, target, max_parts)) {
            ev.verdict = Verdict::member;
            ev.method = "hint-partition";
            ev.partition = *hint;
            return ev;
        }
    }

    if (g.n() <= 12) {
        auto found = exhaustive_cover_search(g, target, max_parts);
        if (found) {
            ev.verdict = Verdict::member;
            ev.method = "exhaustive-partition-search";
            ev.partition = std::move(*found);
        } else {
            ev.verdict = Verdict::non_member;
            ev.method = "exhaustive-partition-search";
        }
        return ev;
    }

    auto found = greedy_cover_search(g, target, max_parts, 64);
    if (found) {
        ev.verdict = Verdict::member;
        ev.method = "greedy-restarts";
        ev.partition = std::move(*found);
    } else {
        ev.verdict = Verdict::unknown;
        ev.method = "greedy-restarts-failed";
    }
    return ev;
}

namespace {

ClassEvidence classify_with(const Graph& g, CoverTarget target, SpecialKind kinds[3], int forb_k,
                            const char* names[3]) {
    ClassEvidence cover = find_clique_cover_with(g, target);
    if (cover.verdict == Verdict::member) return cover;

    for (int i = 0; i < 3; ++i) {
        Graph f = make_special_graph(kinds[i], forb_k);
        if (auto emb = contains_induced(f, g)) {
            ClassEvidence ev;
            ev.verdict = Verdict::non_member;
            ev.method = "forbidden-induced-subgraph";
            ev.forbidden_name = names[i];
            ev.forbidden_embedding = std::move(*emb);
            return ev;
        }
    }

    ClassEvidence ev;
    // an exhausted exact covering search is only a certificate for the
    // covering property, not for the class itself
    ev.verdict = Verdict::unknown;
    ev.method = cover.verdict == Verdict::non_member ? "no-covering-no-forbidden" : "inconclusive";
    return ev;
}

} // namespace

ClassEvidence classify_string(const Graph& g) {
    SpecialKind kinds[3] = {SpecialKind::G, SpecialKind::B, SpecialKind::H};
    const char* names[3] = {"G_5", "B_5", "H_5"};
    return classify_with(g, CoverTarget::planar_quotient, kinds, 5, names);
}

ClassEvidence classify_outerstring(const Graph& g) {
    SpecialKind kinds[3] = {SpecialKind::G, SpecialKind::B, SpecialKind::H};
    const char* names[3] = {"G_4", "B_4", "H_4"};
    return classify_with(g, CoverTarget::outerplanar_quotient, kinds, 4, names);
}

} // namespace graphlim
