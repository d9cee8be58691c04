#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlim/experiments.hpp"
#include "graphlim/recognizers.hpp"

#include <cmath>

using namespace graphlim;

namespace {

double row_value(const ExperimentReport& r, const std::string& stat) {
    for (const auto& row : r.rows)
        if (row.statistic == stat) return std::stod(row.value);
    FAIL("missing row: " << stat);
    return 0;
}

std::string row_string(const ExperimentReport& r, const std::string& stat) {
    for (const auto& row : r.rows)
        if (row.statistic == stat) return row.value;
    FAIL("missing row: " << stat);
    return {};
}

} // namespace

TEST_CASE("density probe references and trivial exactness") {
    auto all_ones = run_density_probe(make_constant(Rat(1)), 50, 5, 1);
    CHECK(row_value(all_ones, "observed.edge_density.mean") == 1.0);
    CHECK(row_string(all_ones, "conjectured_ref.edge_density") == "1/1");

    auto w4 = run_density_probe(make_wka(4, Rat(1, 2)), 300, 8, 42);
    CHECK(row_string(w4, "conjectured_ref.edge_density") == "19/32");
    CHECK(std::fabs(row_value(w4, "observed.edge_density.mean") - 19.0 / 32.0) < 0.02);

    // the reference value is graphon-core's exact density, no re-derivation
    CHECK(row_string(w4, "conjectured_ref.edge_density") == edge_density(make_wka(4, Rat(1, 2))).str());
}

TEST_CASE("degree probe finds the two atoms of W^4_(1/2)") {
    auto r = run_degree_probe(make_wka(4, Rat(1, 2)), 500, 4, 7, 0.05);
    CHECK(row_string(r, "conjectured_ref.atom.0.location") == "1/2");
    CHECK(row_string(r, "conjectured_ref.atom.1.location") == "5/8");
    CHECK(std::fabs(row_value(r, "conjectured_ref.atom.0.mass") - 0.25) < 1e-12);
    CHECK(std::fabs(row_value(r, "conjectured_ref.atom.1.mass") - 0.75) < 1e-12);
    CHECK(std::fabs(row_value(r, "observed.atom.0.mass_in_window") - 0.25) < 0.06);
    CHECK(std::fabs(row_value(r, "observed.atom.1.mass_in_window") - 0.75) < 0.06);

    CHECK_THROWS_AS(run_degree_probe(make_constant(Rat(1, 2)), 10, 1, 1, 0.0), std::invalid_argument);
}

TEST_CASE("speed census counts") {
    auto inc = run_speed_census(CensusClass::incomparability, 4);
    CHECK(row_value(inc, "count.n=1") == 1);
    CHECK(row_value(inc, "count.n=2") == 2);
    CHECK(row_value(inc, "count.n=3") == 8); // every 3-vertex graph

    // dual route: census count vs direct brute-force count
    for (int n = 3; n <= 4; ++n) {
        long long direct = 0;
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1ull << bit)) g.add_edge(u, v);
            if (comparability_brute_force(complement(g))) ++direct;
        }
        CHECK(row_value(inc, "count.n=" + std::to_string(n)) == static_cast<double>(direct));
    }

    // labeled two-clique graphs number exactly 2^(n-1)
    auto tc = run_speed_census(CensusClass::twoclique, 5);
    for (int n = 1; n <= 5; ++n)
        CHECK(row_value(tc, "count.n=" + std::to_string(n)) == std::pow(2.0, n - 1));

    auto c20 = run_speed_census(CensusClass::cts, 3, 2, 0);
    CHECK(row_value(c20, "count.n=2") == 2); // both 2-vertex graphs are bipartite

    // counts never exceed the total and are monotone in t
    auto c30 = run_speed_census(CensusClass::cts, 4, 3, 0);
    for (int n = 2; n <= 4; ++n) {
        const double total = std::pow(2.0, n * (n - 1) / 2);
        double c2 = row_value(run_speed_census(CensusClass::cts, n, 2, 0), "count.n=" + std::to_string(n));
        double c3 = row_value(c30, "count.n=" + std::to_string(n));
        CHECK(c2 <= c3);
        CHECK(c3 <= total);
    }

    CHECK_THROWS_AS(run_speed_census(CensusClass::incomparability, 8), std::invalid_argument);
}

TEST_CASE("twoclique limit probe") {
    // n = 2 labeled: only fractions 0 and 1/2 occur
    auto tiny = run_twoclique_limit_probe(2, 100, 3, Ensemble::labeled);
    double mass0 = row_value(tiny, "observed.hist.bin.0");
    double mass_half = row_value(tiny, "observed.hist.bin.20");
    CHECK(mass0 + mass_half == doctest::Approx(1.0));

    // unlabeled: min fraction roughly uniform on (0, 1/2), mean near 1/4
    auto unl = run_twoclique_limit_probe(100, 20000, 5, Ensemble::unlabeled);
    CHECK(std::fabs(row_value(unl, "observed.mean_min_fraction") - 0.25) < 0.01);

    // labeled: binomial concentration pushes the mean toward 1/2
    auto lab = run_twoclique_limit_probe(100, 20000, 5, Ensemble::labeled);
    CHECK(row_value(lab, "observed.mean_min_fraction") > 0.4);

    // both candidate limits are reported, neither asserted
    CHECK(row_value(lab, "candidate.point_mass_at_half.mean_min_fraction") == 0.5);
    CHECK(row_value(lab, "candidate.uniform_on_0_half.mean_min_fraction") == 0.25);
}

TEST_CASE("equivalence probe verdicts") {
    auto same = run_equivalence_probe(4, Rat(1, 3), Rat(2, 3), 3);
    CHECK(row_value(same, "fingerprints_equal") == 1.0);
    CHECK(row_value(same, "cut_distance.upper") == 0.0);
    CHECK(row_value(same, "verdict.equivalent_evidence") == 1.0);

    auto diff = run_equivalence_probe(4, Rat(1, 4), Rat(1, 2), 2);
    CHECK(row_value(diff, "fingerprints_equal") == 0.0);
    CHECK(row_value(diff, "verdict.equivalent_evidence") == 0.0);
    CHECK(row_string(diff, "edge_density.a") == "77/128");
    CHECK(row_string(diff, "edge_density.b") == "19/32");

    auto degenerate = run_equivalence_probe(4, Rat(0), Rat(1), 3);
    CHECK(row_value(degenerate, "verdict.equivalent_evidence") == 1.0);
}

TEST_CASE("reports are byte-reproducible from their parameters") {
    auto a = run_density_probe(make_wka(3, Rat(1, 2)), 100, 5, 11);
    auto b = run_density_probe(make_wka(3, Rat(1, 2)), 100, 5, 11);
    CHECK(a.to_csv() == b.to_csv());

    auto c = run_density_probe(make_wka(3, Rat(1, 2)), 100, 5, 12);
    CHECK(a.to_csv() != c.to_csv());

    // CSV has the documented header and parameter rows
    CHECK(a.to_csv().rfind("statistic,value,std_error\n", 0) == 0);
    CHECK(a.to_csv().find("param.seed,11") != std::string::npos);
}
