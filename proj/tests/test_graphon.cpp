#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlim/graph.hpp"
#include "graphlim/graphon.hpp"
#include "graphlim/io.hpp"

#include <cmath>
#include <sstream>

using namespace graphlim;

namespace {

std::vector<StepGraphon> corpus() {
    return {make_wka(4, Rat(1, 2)), make_wka(3, Rat(1, 3)), make_wstar(2, 1),
            make_constant(Rat(1, 2)), make_constant(Rat(1)), make_wstar(3, 0)};
}

Graph mask_graph(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit)) g.add_edge(u, v);
    return g;
}

// the closed form of the integral of W^k_a over the square
Rat wka_density_formula(int k, const Rat& a) {
    Rat k2(static_cast<long long>(k) * k);
    return (a * a + (Rat(1) - a) * (Rat(1) - a)) / k2 + Rat(k - 1) / k2 +
           Rat(static_cast<long long>(k) * (k - 1)) / (Rat(2) * k2);
}

} // namespace

TEST_CASE("graphon constructor validation") {
    CHECK_THROWS_AS(StepGraphon({Rat(1, 2)}, {{Rat(1, 2)}}), std::invalid_argument); // sum != 1
    CHECK_THROWS_AS(StepGraphon({Rat(1, 2), Rat(1, 2)}, {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}),
                    std::invalid_argument); // asymmetric
    CHECK_THROWS_AS(StepGraphon({Rat(1)}, {{Rat(2)}}), std::invalid_argument); // out of range
    CHECK_THROWS_AS(make_wka(4, Rat(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_wstar(3, 4), std::invalid_argument);
}

TEST_CASE("degenerate split: W^k_0 = W^k_1 = W*_{k,k}") {
    CHECK(make_wka(4, Rat(0)) == make_wstar(4, 4));
    CHECK(make_wka(4, Rat(1)) == make_wstar(4, 4));
    CHECK(make_wka(1, Rat(0)) == make_wstar(1, 1));
}

TEST_CASE("entropy values") {
    CHECK(entropy(make_constant(Rat(1, 2))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(entropy(make_wka(4, Rat(1, 2))) - 0.75) < 1e-12);
    CHECK(std::fabs(entropy(make_wstar(3, 1)) - 2.0 / 3.0) < 1e-12);
    CHECK(std::fabs(entropy(make_constant(Rat(1)))) < 1e-12);
    CHECK(std::fabs(entropy(make_constant(Rat(0)))) < 1e-12);
    // every member of R_k has entropy 1 - 1/k
    for (int k = 1; k <= 6; ++k)
        for (int s = 0; s <= k; ++s)
            CHECK(std::fabs(entropy(make_wstar(k, s)) - (1.0 - 1.0 / k)) < 1e-12);
}

TEST_CASE("edge density exact values") {
    CHECK(edge_density(make_wka(4, Rat(1, 2))) == Rat(19, 32));
    CHECK(edge_density(make_wka(3, Rat(1, 2))) == Rat(11, 18));
    CHECK(edge_density(make_wka(4, Rat(1, 4))) == Rat(77, 128));
    CHECK(edge_density(make_constant(Rat(1, 3))) == Rat(1, 3));
}

TEST_CASE("edge density agrees with the closed-form integral") {
    for (int k = 1; k <= 6; ++k)
        for (const Rat& a : {Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)})
            CHECK(edge_density(make_wka(k, a)) == wka_density_formula(k, a));
}

TEST_CASE("symmetry: densities of a and 1-a agree exactly") {
    for (int k = 2; k <= 5; ++k)
        for (const Rat& a : {Rat(1, 5), Rat(1, 4), Rat(1, 3), Rat(2, 5)})
            CHECK(edge_density(make_wka(k, a)) == edge_density(make_wka(k, Rat(1) - a)));
}

TEST_CASE("t_ind_exact small examples") {
    StepGraphon half = make_constant(Rat(1, 2));
    CHECK(t_ind_exact(Graph(1), half) == Rat(1));
    CHECK(t_ind_exact(Graph(0), half) == Rat(1));
    CHECK(t_ind_exact(make_basic(BasicKind::complete, 2), half) == Rat(1, 2));

    // hand enumeration of the 2^3 block assignments for K_3 in W*_{2,2}
    StepGraphon w22 = make_wstar(2, 2);
    Rat oracle(0);
    for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2) {
                Rat term = w22.measure(b0) * w22.measure(b1) * w22.measure(b2);
                term *= w22.value(b0, b1) * w22.value(b0, b2) * w22.value(b1, b2);
                oracle += term;
            }
    CHECK(oracle == Rat(7, 16));
    CHECK(t_ind_exact(make_basic(BasicKind::complete, 3), w22) == Rat(7, 16));
}

TEST_CASE("t_ind_exact sums to one over all labeled graphs") {
    for (const auto& w : corpus()) {
        for (int n = 1; n <= 4; ++n) {
            const int pairs = n * (n - 1) / 2;
            Rat total(0);
            for (uint64_t mask = 0; mask < (1ull << pairs); ++mask)
                total += t_ind_exact(mask_graph(n, mask), w);
            CHECK(total == Rat(1));
        }
    }
}

TEST_CASE("t_ind_exact envelope refusal") {
    CHECK_THROWS_AS(t_ind_exact(Graph(10), make_wka(5, Rat(1, 2))), std::domain_error);
}

TEST_CASE("t_ind_mc agrees with the exact value") {
    StepGraphon w = make_wstar(2, 2);
    Graph k3 = make_basic(BasicKind::complete, 3);
    auto est = t_ind_mc(k3, w, 100000, 12345);
    const double exact = Rat(7, 16).to_double();
    CHECK(std::fabs(est.mean - exact) <= 4 * est.std_error + 1e-9);

    auto single = t_ind_mc(Graph(1), w, 10, 7);
    CHECK(single.mean == doctest::Approx(1.0));

    // corpus-wide four-sigma agreement
    for (const auto& g : {make_basic(BasicKind::path, 3), make_basic(BasicKind::cycle, 4)})
        for (const auto& w2 : corpus()) {
            auto e = t_ind_mc(g, w2, 40000, 99);
            double exact2 = t_ind_exact(g, w2).to_double();
            CHECK(std::fabs(e.mean - exact2) <= 4 * e.std_error + 1e-9);
        }
}

TEST_CASE("R_k membership") {
    CHECK(is_in_rk(make_wka(4, Rat(1, 3)), 4));
    CHECK(!is_in_rk(make_wka(4, Rat(1, 3)), 3));
    CHECK(is_in_rk(make_wstar(3, 1), 3));
    CHECK(!is_in_rk(make_wstar(3, 1), 4));
    CHECK(is_r_infinity(make_constant(Rat(1, 2))));
    for (int k = 1; k <= 4; ++k) CHECK(!is_in_rk(make_constant(Rat(1, 2)), k));
    CHECK(!is_r_infinity(make_wka(4, Rat(1, 2))));
    CHECK(is_in_rk(make_wstar(2, 0), 2));
}

TEST_CASE("disjoint clique parts") {
    // identity pattern: three blocks, ones on the diagonal only
    StepGraphon ident({Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                      {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    auto parts = disjoint_clique_parts(ident, {0, 1, 2});
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 3);

    // W^4_{1/2}: group one splits into its two sub-blocks
    StepGraphon w = make_wka(4, Rat(1, 2));
    auto g1 = disjoint_clique_parts(w, {0, 1});
    REQUIRE(g1.has_value());
    CHECK(g1->size() == 2);

    // transitivity failure: 1 between (0,1) and (1,2) but not (0,2)
    StepGraphon chain({Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                      {{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
    CHECK(!disjoint_clique_parts(chain, {0, 1, 2}).has_value());

    // reflexivity failure: a zero diagonal
    StepGraphon zdiag({Rat(1, 2), Rat(1, 2)}, {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(!disjoint_clique_parts(zdiag, {0, 1}).has_value());

    // fractional restriction is rejected outright
    CHECK_THROWS_AS(disjoint_clique_parts(make_constant(Rat(1, 2)), {0}), std::invalid_argument);

    // whenever parts come back they form a genuine partition of the blocks
    for (const auto& [wg, blocks] :
         std::vector<std::pair<StepGraphon, std::vector<int>>>{{ident, {0, 1, 2}}, {w, {0, 1}}}) {
        auto ps = disjoint_clique_parts(wg, blocks);
        REQUIRE(ps.has_value());
        std::vector<int> seen;
        for (const auto& p : *ps) seen.insert(seen.end(), p.begin(), p.end());
        std::sort(seen.begin(), seen.end());
        std::vector<int> want = blocks;
        std::sort(want.begin(), want.end());
        CHECK(seen == want);
    }
}

TEST_CASE("isomorphism class counts") {
    CHECK(isomorphism_classes(1).size() == 1);
    CHECK(isomorphism_classes(2).size() == 2);
    CHECK(isomorphism_classes(3).size() == 4);
    CHECK(isomorphism_classes(4).size() == 11);
    CHECK(isomorphism_classes(5).size() == 34);
    long long total = 0;
    for (const auto& c : isomorphism_classes(4)) total += c.labeled_count;
    CHECK(total == 64);
}

TEST_CASE("density fingerprints") {
    CHECK(density_fingerprint(make_wka(4, Rat(1, 3)), 4) == density_fingerprint(make_wka(4, Rat(2, 3)), 4));
    CHECK(!(density_fingerprint(make_wka(4, Rat(1, 4)), 2) == density_fingerprint(make_wka(4, Rat(1, 2)), 2)));

    // constant 1: density one exactly on complete graphs
    auto fp = density_fingerprint(make_constant(Rat(1)), 3);
    for (const auto& e : fp.entries) {
        Rat expected = e.value;
        CHECK((expected == Rat(0) || expected == Rat(1)));
    }

    // labeled sum per order is exactly one
    for (const auto& w : {make_wka(3, Rat(1, 2)), make_wstar(2, 1)}) {
        auto f = density_fingerprint(w, 4);
        for (int n = 1; n <= 4; ++n) {
            Rat sum(0);
            for (const auto& e : f.entries)
                if (e.key.substr(0, 2) == std::to_string(n) + ":") sum += Rat(e.labeled_count) * e.value;
            CHECK(sum == Rat(1));
        }
    }

    CHECK_THROWS_AS(density_fingerprint(make_constant(Rat(1, 2)), 6), std::invalid_argument);
}

TEST_CASE("cut distance bounds") {
    StepGraphon w = make_wka(4, Rat(1, 2));
    auto same = cut_distance_bounds(w, w, 3);
    CHECK(same.first == 0.0);
    CHECK(same.second == 0.0);

    // flip pairs are identified by a block permutation of the refinement
    auto flip = cut_distance_bounds(make_wka(4, Rat(1, 3)), make_wka(4, Rat(2, 3)), 2);
    CHECK(flip.second == 0.0);

    auto diff = cut_distance_bounds(make_wka(4, Rat(1, 4)), make_wka(4, Rat(1, 2)), 2);
    CHECK(diff.first > 0.0);
    CHECK(diff.first <= diff.second);

    // lower <= upper across corpus pairs
    auto cs = corpus();
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) {
            auto [lo, hi] = cut_distance_bounds(cs[i], cs[j], 3);
            CHECK(lo <= hi + 1e-15);
            if (i == j) CHECK(hi == 0.0);
        }
}

TEST_CASE("graphon text format round trip") {
    for (const auto& w : corpus()) {
        std::ostringstream os;
        write_graphon(os, w);
        std::istringstream is(os.str());
        CHECK(read_graphon(is) == w);
    }
    std::istringstream bad("2\n1/2 1/2\n1/2 1/2\n");
    CHECK_THROWS(read_graphon(bad)); // missing second value row
}
