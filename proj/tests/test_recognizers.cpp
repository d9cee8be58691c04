#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlim/planarity.hpp"
#include "graphlim/recognizers.hpp"
#include "graphlim/rng.hpp"
#include "graphlim/subgraph.hpp"

#include <algorithm>

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

Graph disjoint_cliques(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
    for (int u = a; u < a + b; ++u)
        for (int v = u + 1; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

// complement complete bipartite, checked directly
bool complement_complete_bipartite(const Graph& g) {
    Graph c = complement(g);
    // 2-color the complement and demand completeness across the classes
    std::vector<int> side(static_cast<size_t>(c.n()), -1);
    for (int v0 = 0; v0 < c.n(); ++v0) {
        if (side[static_cast<size_t>(v0)] != -1) continue;
        side[static_cast<size_t>(v0)] = 0;
        std::vector<int> stack{v0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < c.n(); ++v) {
                if (!c.has_edge(u, v)) continue;
                if (side[static_cast<size_t>(v)] == -1) {
                    side[static_cast<size_t>(v)] = 1 - side[static_cast<size_t>(u)];
                    stack.push_back(v);
                } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v)
            if ((side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)]) != c.has_edge(u, v))
                return false;
    return true;
}

Graph g3_graph() { return make_special_graph(SpecialKind::G, 3); }

} // namespace

TEST_CASE("two-clique recognition") {
    auto yes = is_two_clique(disjoint_cliques(3, 2));
    CHECK(yes.verdict == Verdict::member);
    REQUIRE(yes.partition.has_value());
    for (const auto& part : yes.partition->parts) CHECK(is_clique(disjoint_cliques(3, 2), part));

    auto p3 = is_two_clique(make_basic(BasicKind::path, 3));
    CHECK(p3.verdict == Verdict::non_member);
    CHECK(p3.forbidden_name == "P_3");

    auto c4 = is_two_clique(make_basic(BasicKind::cycle, 4));
    CHECK(c4.verdict == Verdict::non_member);

    CHECK(is_two_clique(Graph(0)).verdict == Verdict::member);
    CHECK(is_two_clique(make_basic(BasicKind::complete, 4)).verdict == Verdict::member);
    CHECK(is_two_clique(Graph(3)).verdict == Verdict::non_member); // three isolated vertices
}

TEST_CASE("two-clique equals complement-complete-bipartite on small graphs") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = mask_graph(n, mask);
            CHECK((is_two_clique(g).verdict == Verdict::member) == complement_complete_bipartite(g));
        }
    }
}

TEST_CASE("comparability basics") {
    auto c6 = is_comparability(make_basic(BasicKind::cycle, 6));
    CHECK(c6.verdict == Verdict::member);
    REQUIRE(c6.orientation.has_value());
    CHECK(audit_transitive_orientation(make_basic(BasicKind::cycle, 6), *c6.orientation));

    CHECK(is_comparability(make_basic(BasicKind::cycle, 5)).verdict == Verdict::non_member);
    CHECK(is_comparability(make_basic(BasicKind::cycle, 7)).verdict == Verdict::non_member);
    CHECK(is_comparability(make_basic(BasicKind::complete, 6)).verdict == Verdict::member);
    CHECK(is_comparability(Graph(13)).verdict == Verdict::unknown); // envelope
}

TEST_CASE("incomparability obstructions C_6 and G_3") {
    CHECK(is_incomparability(make_basic(BasicKind::cycle, 6)).verdict == Verdict::non_member);
    CHECK(is_incomparability(g3_graph()).verdict == Verdict::non_member);
    // C_6 itself is a comparability graph though
    CHECK(is_comparability(make_basic(BasicKind::cycle, 6)).verdict == Verdict::member);
}

TEST_CASE("comparability matches brute force on all graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = mask_graph(n, mask);
            CHECK((is_comparability(g).verdict == Verdict::member) == comparability_brute_force(g));
        }
    }
}

TEST_CASE("comparability matches brute force on sampled 6-vertex graphs") {
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(6, 7000 + static_cast<uint64_t>(trial), 20 + (trial * 13) % 70);
        CHECK((is_comparability(g).verdict == Verdict::member) == comparability_brute_force(g));
    }
}

TEST_CASE("every bipartite graph is a comparability graph") {
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = mask_graph(n, mask);
            // bipartite test by 2-coloring
            std::vector<int> side(static_cast<size_t>(n), -1);
            bool bip = true;
            for (int v0 = 0; v0 < n && bip; ++v0) {
                if (side[static_cast<size_t>(v0)] != -1) continue;
                side[static_cast<size_t>(v0)] = 0;
                std::vector<int> stack{v0};
                while (!stack.empty() && bip) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v = 0; v < n; ++v) {
                        if (!g.has_edge(u, v)) continue;
                        if (side[static_cast<size_t>(v)] == -1) {
                            side[static_cast<size_t>(v)] = 1 - side[static_cast<size_t>(u)];
                            stack.push_back(v);
                        } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)]) {
                            bip = false;
                        }
                    }
                }
            }
            if (bip) CHECK(is_comparability(g).verdict == Verdict::member);
        }
    }
    // larger seeded bipartite graphs, still inside the exact envelope
    for (int trial = 0; trial < 40; ++trial) {
        int n = 7 + trial % 2;
        Graph g(n);
        uint64_t idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx)
                if ((u % 2) != (v % 2) && CounterRng::at(8100 + static_cast<uint64_t>(trial), 1, idx) % 2)
                    g.add_edge(u, v);
        CHECK(is_comparability(g).verdict == Verdict::member);
    }
}

TEST_CASE("incomparability verdict equals comparability of the complement") {
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(4 + trial % 5, 9100 + static_cast<uint64_t>(trial), 30 + trial % 50);
        CHECK(is_incomparability(g).verdict == is_comparability(complement(g)).verdict);
    }
}

TEST_CASE("clique covers with quotient targets") {
    Graph k5e = make_basic(BasicKind::complete_minus_edge, 5);
    auto ev = find_clique_cover_with(k5e, CoverTarget::planar_quotient);
    CHECK(ev.verdict == Verdict::member);
    REQUIRE(ev.partition.has_value());
    CHECK(audit_clique_cover(k5e, *ev.partition, CoverTarget::planar_quotient, 0));

    // C_6 with the pair cover is a C(3,3) witness: quotient K_3, outerplanar
    Graph c6 = make_basic(BasicKind::cycle, 6);
    VertexPartition pairs;
    pairs.n = 6;
    pairs.parts = {{0, 1}, {2, 3}, {4, 5}};
    auto hinted = find_clique_cover_with(c6, CoverTarget::outerplanar_quotient, 0, pairs);
    CHECK(hinted.verdict == Verdict::member);
    CHECK(hinted.method == "hint-partition");

    auto found = find_clique_cover_with(c6, CoverTarget::outerplanar_quotient);
    CHECK(found.verdict == Verdict::member);

    // max-parts target is exactly C(k,k) membership
    CHECK(find_clique_cover_with(make_basic(BasicKind::complete, 6), CoverTarget::max_parts, 1).verdict ==
          Verdict::member);
    CHECK(find_clique_cover_with(make_basic(BasicKind::cycle, 5), CoverTarget::max_parts, 2).verdict ==
          Verdict::non_member);
    CHECK(find_clique_cover_with(make_basic(BasicKind::cycle, 5), CoverTarget::max_parts, 3).verdict ==
          Verdict::member);

    // a bad hint falls back to the search
    VertexPartition bad;
    bad.n = 5;
    bad.parts = {{0, 1, 2, 3, 4}};
    auto fell = find_clique_cover_with(make_basic(BasicKind::cycle, 5), CoverTarget::planar_quotient, 0, bad);
    CHECK(fell.verdict == Verdict::member);
    CHECK(fell.method == "exhaustive-partition-search");
}

TEST_CASE("classify_string on the intersection-pattern graphs") {
    // G_4 is in C(4,4), so it has a planar clique covering
    auto g4 = classify_string(make_special_graph(SpecialKind::G, 4));
    CHECK(g4.verdict == Verdict::member);
    REQUIRE(g4.partition.has_value());
    CHECK(audit_clique_cover(make_special_graph(SpecialKind::G, 4), *g4.partition,
                             CoverTarget::planar_quotient, 0));

    // G_5 is not a string graph; the forbidden-subgraph route fires
    auto g5 = classify_string(make_special_graph(SpecialKind::G, 5));
    CHECK(g5.verdict == Verdict::non_member);
    CHECK(g5.forbidden_name == "G_5");
    REQUIRE(g5.forbidden_embedding.has_value());

    CHECK(classify_string(make_basic(BasicKind::complete, 10)).verdict == Verdict::member);
}

TEST_CASE("classify_outerstring basics") {
    CHECK(classify_outerstring(make_basic(BasicKind::cycle, 6)).verdict == Verdict::member);
    CHECK(classify_outerstring(make_basic(BasicKind::complete, 8)).verdict == Verdict::member);

    auto b4 = classify_outerstring(make_special_graph(SpecialKind::B, 4));
    CHECK(b4.verdict == Verdict::non_member);
    CHECK(b4.forbidden_name == "B_4");
}

TEST_CASE("sufficiency and necessity never contradict") {
    std::vector<Graph> corpus{make_basic(BasicKind::cycle, 6),
                              make_basic(BasicKind::complete, 7),
                              make_special_graph(SpecialKind::G, 4),
                              make_special_graph(SpecialKind::B, 4),
                              make_basic(BasicKind::prism, 6)};
    for (int trial = 0; trial < 20; ++trial)
        corpus.push_back(random_graph(7 + trial % 3, 9900 + static_cast<uint64_t>(trial), 40));

    for (const auto& g : corpus) {
        for (auto target : {CoverTarget::planar_quotient, CoverTarget::outerplanar_quotient}) {
            auto cover = find_clique_cover_with(g, target);
            if (cover.verdict != Verdict::member) continue;
            const int forb_k = target == CoverTarget::planar_quotient ? 5 : 4;
            bool forbidden = false;
            for (auto kind : {SpecialKind::G, SpecialKind::B, SpecialKind::H}) {
                Graph f = make_special_graph(kind, forb_k);
                if (f.n() <= g.n() && contains_induced(f, g)) forbidden = true;
            }
            CHECK(!forbidden);
        }
    }
}
