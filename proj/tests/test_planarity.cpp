#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlim/graph.hpp"
#include "graphlim/planarity.hpp"
#include "graphlim/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

using namespace graphlim;

namespace {

Graph mask_graph(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit)) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, uint64_t seed, int density_percent) {
    Graph g(n);
    uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if (CounterRng::at(seed, 3, idx) % 100 < static_cast<uint64_t>(density_percent))
                g.add_edge(u, v);
    return g;
}

// ---- independent oracle: search for a K_5 or K_{3,3} subdivision ----

// connect required branch pairs by internally disjoint paths through
// non-branch vertices; plain exponential backtracking
bool connect_pairs(const Graph& g, const std::vector<int>& branch,
                   const std::vector<std::pair<int, int>>& pairs, size_t idx,
                   std::vector<char>& used) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];

    std::function<bool(int)> walk = [&](int at) -> bool {
        if (at == b) return connect_pairs(g, branch, pairs, idx + 1, used);
        for (int next = 0; next < g.n(); ++next) {
            if (!g.has_edge(at, next)) continue;
            if (next == b) {
                if (walk(b)) return true;
                continue;
            }
            if (used[static_cast<size_t>(next)]) continue;
            if (std::find(branch.begin(), branch.end(), next) != branch.end()) continue;
            used[static_cast<size_t>(next)] = 1;
            if (walk(next)) return true;
            used[static_cast<size_t>(next)] = 0;
        }
        return false;
    };
    return walk(a);
}

bool has_kuratowski_subdivision(const Graph& g) {
    const int n = g.n();
    std::vector<char> used(static_cast<size_t>(n), 0);

    std::vector<int> pick(5);
    std::function<bool(int, int)> choose5 = [&](int from, int depth) -> bool {
        if (depth == 5) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    pairs.push_back({pick[static_cast<size_t>(i)], pick[static_cast<size_t>(j)]});
            std::fill(used.begin(), used.end(), 0);
            return connect_pairs(g, pick, pairs, 0, used);
        }
        for (int v = from; v < n; ++v) {
            if (g.degree(v) < 4) continue;
            pick[static_cast<size_t>(depth)] = v;
            if (choose5(v + 1, depth + 1)) return true;
        }
        return false;
    };
    if (choose5(0, 0)) return true;

    std::vector<int> side_a(3), side_b(3);
    std::function<bool(int, int)> choose_a = [&](int from, int depth) -> bool {
        if (depth == 3) {
            std::function<bool(int, int)> choose_b = [&](int bfrom, int bdepth) -> bool {
                if (bdepth == 3) {
                    std::vector<int> branch;
                    branch.insert(branch.end(), side_a.begin(), side_a.end());
                    branch.insert(branch.end(), side_b.begin(), side_b.end());
                    std::vector<std::pair<int, int>> pairs;
                    for (int x : side_a)
                        for (int y : side_b) pairs.push_back({x, y});
                    std::fill(used.begin(), used.end(), 0);
                    return connect_pairs(g, branch, pairs, 0, used);
                }
                for (int v = bfrom; v < n; ++v) {
                    if (g.degree(v) < 3) continue;
                    if (std::find(side_a.begin(), side_a.end(), v) != side_a.end()) continue;
                    side_b[static_cast<size_t>(bdepth)] = v;
                    if (choose_b(v + 1, bdepth + 1)) return true;
                }
                return false;
            };
            return choose_b(0, 0);
        }
        for (int v = from; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            side_a[static_cast<size_t>(depth)] = v;
            if (choose_a(v + 1, depth + 1)) return true;
        }
        return false;
    };
    return choose_a(0, 0);
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

} // namespace

TEST_CASE("planarity of the named graphs") {
    CHECK(!is_planar(make_basic(BasicKind::complete, 5)));
    CHECK(is_planar(make_basic(BasicKind::complete_minus_edge, 5)));
    CHECK(is_planar(make_basic(BasicKind::complete, 4)));
    CHECK(is_planar(make_basic(BasicKind::cycle, 6)));
    CHECK(is_planar(make_basic(BasicKind::prism, 6)));
    CHECK(!is_planar(petersen()));

    Graph k33(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
    CHECK(!is_planar(k33));

    // K_33 with one edge subdivided stays nonplanar
    Graph k33s(7);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            if (!(a == 0 && b == 3)) k33s.add_edge(a, b);
    k33s.add_edge(0, 6);
    k33s.add_edge(6, 3);
    CHECK(!is_planar(k33s));
}

TEST_CASE("outerplanarity via the apex reduction") {
    CHECK(is_outerplanar(make_basic(BasicKind::complete_minus_edge, 4)));
    CHECK(!is_outerplanar(make_basic(BasicKind::complete, 4)));
    CHECK(is_outerplanar(make_basic(BasicKind::cycle, 6)));
    CHECK(is_outerplanar(make_basic(BasicKind::path, 7)));
    CHECK(!is_outerplanar(make_basic(BasicKind::prism, 6))); // K_4 minor
    Graph k23(5);
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
    CHECK(!is_outerplanar(k23));
    CHECK(is_planar(k23));
}

TEST_CASE("planar verdicts satisfy the edge bound") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + trial % 9;
        Graph g = random_graph(n, 4000 + static_cast<uint64_t>(trial), 20 + trial % 70);
        if (is_planar(g) && n >= 3) CHECK(g.edge_count() <= 3ll * n - 6);
    }
}

TEST_CASE("exhaustive agreement with the subdivision oracle up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = mask_graph(n, mask);
            CHECK(is_planar(g) == !has_kuratowski_subdivision(g));
        }
    }
}

TEST_CASE("sampled agreement with the subdivision oracle at 7 to 9 vertices") {
    for (int trial = 0; trial < 150; ++trial) {
        int n = 7 + trial % 3;
        Graph g = random_graph(n, 5100 + static_cast<uint64_t>(trial), 25 + (trial * 7) % 55);
        CHECK(is_planar(g) == !has_kuratowski_subdivision(g));
    }
}

TEST_CASE("disconnected and tree-like inputs") {
    CHECK(is_planar(Graph(0)));
    CHECK(is_planar(Graph(12)));
    CHECK(is_planar(make_basic(BasicKind::path, 16)));
    // two K_4 blocks joined by a bridge
    Graph g(8);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            g.add_edge(u, v);
            g.add_edge(u + 4, v + 4);
        }
    g.add_edge(3, 4);
    CHECK(is_planar(g));
    // K_5 hidden in one block
    Graph h(9);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) h.add_edge(u, v);
    h.add_edge(4, 5);
    h.add_edge(5, 6);
    CHECK(!is_planar(h));
}
