#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlim/geometry.hpp"
#include "graphlim/io.hpp"
#include "graphlim/recognizers.hpp"

#include <sstream>

using namespace graphlim;

namespace {

Point P(long long x, long long y) { return Point{BigRat(x), BigRat(y)}; }
Point Pr(const char* x, const char* y) { return Point{BigRat::from_string(x), BigRat::from_string(y)}; }

Polyline seg(Point a, Point b) {
    Polyline pl;
    pl.pts = {a, b};
    return pl;
}

Representation rep_of(std::vector<std::vector<Polyline>> sets) {
    Representation r;
    r.n = static_cast<int>(sets.size());
    r.sets = std::move(sets);
    return r;
}

// two crossing diagonal segments
Representation crossing_pair() {
    return rep_of({{seg(P(0, 0), P(4, 4))}, {seg(P(0, 4), P(4, 0))}});
}

} // namespace

TEST_CASE("exact predicates") {
    CHECK(geom::orient(P(0, 0), P(1, 0), P(0, 1)) > 0);
    CHECK(geom::orient(P(0, 0), P(0, 1), P(1, 0)) < 0);
    CHECK(geom::orient(P(0, 0), P(2, 2), P(4, 4)) == 0);

    CHECK(geom::point_on_segment(P(1, 1), P(0, 0), P(2, 2)));
    CHECK(!geom::point_on_segment(P(3, 3), P(0, 0), P(2, 2)));
    CHECK(geom::point_on_segment(P(0, 0), P(0, 0), P(2, 2)));

    auto cross = geom::segment_meet(P(0, 0), P(4, 4), P(0, 4), P(4, 0));
    CHECK(cross.kind == geom::SegMeet::cross);
    CHECK(cross.at == P(2, 2));

    auto touch = geom::segment_meet(P(0, 0), P(2, 2), P(2, 2), P(4, 0));
    CHECK(touch.kind == geom::SegMeet::touch);
    CHECK(touch.at == P(2, 2));

    // T-tangency: endpoint in the interior of the other segment
    auto tee = geom::segment_meet(P(0, 0), P(4, 0), P(2, 0), P(2, 3));
    CHECK(tee.kind == geom::SegMeet::touch);

    auto over = geom::segment_meet(P(0, 0), P(4, 0), P(2, 0), P(6, 0));
    CHECK(over.kind == geom::SegMeet::overlap);

    auto none = geom::segment_meet(P(0, 0), P(1, 0), P(0, 1), P(1, 1));
    CHECK(none.kind == geom::SegMeet::none);

    CHECK(geom::dist2_point_segment(P(0, 3), P(-2, 0), P(2, 0)) == BigRat(9));
    CHECK(geom::dist2_segments(P(0, 0), P(1, 0), P(0, 2), P(1, 2)) == BigRat(4));
    CHECK(geom::dist2_segments(P(0, 0), P(4, 4), P(0, 4), P(4, 0)) == BigRat(0));
}

TEST_CASE("intersection graph examples") {
    CHECK(intersection_graph(crossing_pair()) == make_basic(BasicKind::complete, 2));

    // disjoint parallel segments
    auto par = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(0, 2), P(4, 2))}});
    CHECK(intersection_graph(par).edge_count() == 0);

    // triangle boundary: three segments sharing endpoints pairwise
    auto tri = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(4, 0), P(2, 3))}, {seg(P(2, 3), P(0, 0))}});
    CHECK(intersection_graph(tri) == make_basic(BasicKind::complete, 3));
}

TEST_CASE("representation validation") {
    Polyline bad;
    bad.pts = {P(0, 0)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    Polyline dup;
    dup.pts = {P(0, 0), P(0, 0)};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

    Polyline closed_repeat;
    closed_repeat.closed = true;
    closed_repeat.pts = {P(0, 0), P(1, 0), P(0, 0), P(0, 1)};
    CHECK_THROWS_AS(closed_repeat.validate(), std::invalid_argument);

    // disconnected set
    Representation r = rep_of({{seg(P(0, 0), P(1, 0)), seg(P(5, 5), P(6, 5))}});
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);

    // connected two-piece set is fine
    Representation ok = rep_of({{seg(P(0, 0), P(2, 0)), seg(P(1, 0), P(1, 2))}});
    ok.validate();
}

TEST_CASE("general position report") {
    auto pass = check_general_position(crossing_pair());
    CHECK(pass.pass);
    CHECK(pass.intersection_points == 1);
    CHECK(pass.triple_points == 0);

    // three concurrent segments: one triple point
    auto triple = rep_of({{seg(P(-2, 0), P(2, 0))}, {seg(P(0, -2), P(0, 2))}, {seg(P(-2, -2), P(2, 2))}});
    auto t = check_general_position(triple);
    CHECK(!t.pass);
    CHECK(t.triple_points == 1);

    // collinear overlap: infinite intersection
    auto over = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(2, 0), P(6, 0))}});
    auto o = check_general_position(over);
    CHECK(!o.pass);
    CHECK(o.infinite_intersection_pairs == 1);

    // endpoint tangency is an improper crossing
    auto tee = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(2, 0), P(2, 3))}});
    auto imp = check_general_position(tee);
    CHECK(!imp.pass);
    CHECK(imp.improper_crossings == 1);

    // parallel but disjoint segments still violate direction distinctness
    auto par = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(0, 2), P(4, 2))}});
    auto pr = check_general_position(par);
    CHECK(!pr.pass);
    CHECK(pr.coincident_direction_pairs == 1);
}

TEST_CASE("normalize: crossing pair") {
    Representation out = normalize(crossing_pair(), 1);
    CHECK(intersection_graph(out) == make_basic(BasicKind::complete, 2));
    CHECK(check_general_position(out).pass);
    for (const auto& set : out.sets) {
        REQUIRE(set.size() == 1);
        CHECK(!set[0].closed);
    }
}

TEST_CASE("normalize removes a triple point while preserving K_3") {
    auto triple = rep_of({{seg(P(-4, 0), P(4, 0))}, {seg(P(0, -4), P(0, 4))}, {seg(P(-4, -4), P(4, 4))}});
    REQUIRE(intersection_graph(triple) == make_basic(BasicKind::complete, 3));
    Representation out = normalize(triple, 2);
    CHECK(intersection_graph(out) == make_basic(BasicKind::complete, 3));
    auto report = check_general_position(out);
    CHECK(report.pass);
    CHECK(report.triple_points == 0);
}

TEST_CASE("normalize preserves a touching C_6") {
    // six segments joined endpoint to endpoint in a hexagon
    std::vector<Point> hex{P(4, 0), P(2, 4), P(-2, 4), P(-4, 0), P(-2, -4), P(2, -4)};
    std::vector<std::vector<Polyline>> sets;
    for (int i = 0; i < 6; ++i) sets.push_back({seg(hex[static_cast<size_t>(i)], hex[static_cast<size_t>((i + 1) % 6)])});
    Representation c6rep = rep_of(sets);
    REQUIRE(intersection_graph(c6rep) == make_basic(BasicKind::cycle, 6));

    Representation out = normalize(c6rep, 3);
    CHECK(intersection_graph(out) == make_basic(BasicKind::cycle, 6));
    CHECK(check_general_position(out).pass);
}

TEST_CASE("normalize handles isolated vertices and overlaps") {
    // overlap pair plus an isolated far-away segment
    auto mixed = rep_of({{seg(P(0, 0), P(4, 0))}, {seg(P(2, 0), P(6, 0))}, {seg(P(20, 20), P(24, 20))}});
    Graph want = intersection_graph(mixed);
    REQUIRE(want.has_edge(0, 1));
    REQUIRE(want.degree(2) == 0);
    Representation out = normalize(mixed, 4);
    CHECK(intersection_graph(out) == want);
    CHECK(check_general_position(out).pass);
}

TEST_CASE("normalize is deterministic per seed") {
    auto triple = rep_of({{seg(P(-4, 0), P(4, 0))}, {seg(P(0, -4), P(0, 4))}, {seg(P(-4, -4), P(4, 4))}});
    std::ostringstream a, b;
    write_representation(a, normalize(triple, 99));
    write_representation(b, normalize(triple, 99));
    CHECK(a.str() == b.str());
}

TEST_CASE("normalize_outer anchors curves on the enlarged circle") {
    // radial segments inside the unit-16 disk, touching the boundary
    Disk d{P(0, 0), BigRat(16)};
    auto mk = [&](Point inner, Point boundary) { return seg(inner, boundary); };
    // two crossing chords plus one lonely radius
    Representation rep = rep_of({{mk(P(-12, -9), P(0, 16))},
                                 {mk(P(-12, 9), P(0, -16))},
                                 {mk(P(4, 3), P(16, 0))}});
    rep.disk = d;
    // the first two segments cross; the third stays clear
    Graph g0 = intersection_graph(rep);
    REQUIRE(g0.has_edge(0, 1));
    REQUIRE(g0.degree(2) == 0);

    Representation out = normalize_outer(rep, 5);
    CHECK(intersection_graph(out) == g0);
    CHECK(check_general_position(out).pass);
    REQUIRE(out.disk.has_value());
    const BigRat r2 = out.disk->radius * out.disk->radius;
    for (const auto& set : out.sets) {
        REQUIRE(set.size() == 1);
        const auto& pts = set[0].pts;
        CHECK(!set[0].closed);
        auto d2 = [&](const Point& p) {
            BigRat dx = p.x - out.disk->center.x, dy = p.y - out.disk->center.y;
            return dx * dx + dy * dy;
        };
        CHECK(d2(pts.front()) == r2);
        CHECK(d2(pts.back()) == r2);
        for (size_t i = 1; i + 1 < pts.size(); ++i) CHECK(d2(pts[i]) < r2);
    }
}

TEST_CASE("normalize_outer validates its preconditions") {
    Disk d{P(0, 0), BigRat(16)};
    // set strictly inside: misses the boundary
    Representation inside = rep_of({{seg(P(0, 0), P(4, 0))}});
    inside.disk = d;
    CHECK_THROWS_AS(normalize_outer(inside, 1), std::invalid_argument);

    // set leaving the disk
    Representation outside = rep_of({{seg(P(0, 0), P(20, 0))}});
    outside.disk = d;
    CHECK_THROWS_AS(normalize_outer(outside, 1), std::invalid_argument);

    Representation no_disk = rep_of({{seg(P(0, 0), P(4, 0))}});
    CHECK_THROWS_AS(normalize_outer(no_disk, 1), std::invalid_argument);
}

TEST_CASE("build_outerstring_from_cover reproduces C_6") {
    Graph c6 = make_basic(BasicKind::cycle, 6);
    VertexPartition cover;
    cover.n = 6;
    cover.parts = {{0, 1}, {2, 3}, {4, 5}};
    Disk d{P(0, 0), BigRat(100)};
    Representation rep = build_outerstring_from_cover(c6, cover, d);
    CHECK(intersection_graph(rep) == c6);
    // every set touches the boundary circle
    const BigRat r2 = d.radius * d.radius;
    for (const auto& set : rep.sets) {
        bool touches = false;
        for (const auto& pl : set)
            for (const auto& p : pl.pts)
                if (p.x * p.x + p.y * p.y == r2) touches = true;
        CHECK(touches);
    }
}

TEST_CASE("build_outerstring_from_cover edge cases") {
    Disk d{P(0, 0), BigRat(100)};

    // K_2 with singleton parts: two curves sharing one interior point
    Graph k2 = make_basic(BasicKind::complete, 2);
    Representation rk2 = build_outerstring_from_cover(k2, VertexPartition::singletons(2), d);
    CHECK(intersection_graph(rk2) == k2);

    // an isolated vertex gets a whisker meeting nothing
    Graph iso(3);
    iso.add_edge(0, 1);
    Representation riso = build_outerstring_from_cover(iso, VertexPartition::singletons(3), d);
    CHECK(intersection_graph(riso) == iso);

    // invalid covers are rejected
    Graph c5 = make_basic(BasicKind::cycle, 5);
    VertexPartition notclique;
    notclique.n = 5;
    notclique.parts = {{0, 1, 2}, {3, 4}};
    CHECK_THROWS_AS(build_outerstring_from_cover(c5, notclique, d), std::invalid_argument);

    VertexPartition k4parts = VertexPartition::singletons(4);
    CHECK_THROWS_AS(build_outerstring_from_cover(make_basic(BasicKind::complete, 4), k4parts, d),
                    std::invalid_argument); // K_4 quotient is not outerplanar
}

TEST_CASE("round trip: covers found by the recognizer rebuild the graph") {
    std::vector<Graph> corpus{make_basic(BasicKind::cycle, 6), make_basic(BasicKind::path, 5),
                              make_basic(BasicKind::complete, 5), make_basic(BasicKind::cycle, 7)};
    Disk d{P(0, 0), BigRat(100)};
    for (const auto& g : corpus) {
        auto ev = find_clique_cover_with(g, CoverTarget::outerplanar_quotient);
        REQUIRE(ev.verdict == Verdict::member);
        Representation rep = build_outerstring_from_cover(g, *ev.partition, d);
        CHECK(intersection_graph(rep) == g);
    }
}

namespace {

// convex-position K_5: A_i are the edge-star first thirds, A_ij the middle
// thirds; every e_ij reassembles the straight segment
Representation convex_k5_rep(const std::vector<Point>& corner) {
    std::vector<std::vector<Polyline>> sets(15);
    auto third = [](const Point& a, const Point& b, int num) {
        return Point{a.x + (b.x - a.x) * BigRat(num, 3), a.y + (b.y - a.y) * BigRat(num, 3)};
    };
    for (int i = 1; i <= 5; ++i) {
        std::vector<Polyline> star;
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            star.push_back(seg(corner[static_cast<size_t>(i - 1)],
                               third(corner[static_cast<size_t>(i - 1)], corner[static_cast<size_t>(j - 1)], 1)));
        }
        sets[static_cast<size_t>(special_singleton_index(5, i))] = star;
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            const Point& a = corner[static_cast<size_t>(i - 1)];
            const Point& b = corner[static_cast<size_t>(j - 1)];
            sets[static_cast<size_t>(special_pair_index(5, i, j))] = {seg(third(a, b, 1), third(a, b, 2))};
        }
    Representation r;
    r.n = 15;
    r.sets = std::move(sets);
    return r;
}

// independent oracle: straight-line crossing count over disjoint index pairs
long long straight_crossings(const std::vector<Point>& corner) {
    long long count = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int p = i + 1; p <= 5; ++p)
                for (int q = p + 1; q <= 5; ++q) {
                    if (p == j || q == j) continue;
                    auto m = geom::segment_meet(corner[static_cast<size_t>(i - 1)], corner[static_cast<size_t>(j - 1)],
                                                corner[static_cast<size_t>(p - 1)], corner[static_cast<size_t>(q - 1)]);
                    if (m.kind == geom::SegMeet::cross) ++count;
                }
    return count;
}

} // namespace

TEST_CASE("derive_k5_drawing on the convex-position construction") {
    std::vector<Point> corner{P(0, 0), P(13, 0), P(17, 8), P(7, 17), P(-5, 9)};
    long long oracle = straight_crossings(corner);
    CHECK(oracle == 5); // convex position: one crossing per 4-subset

    auto report = derive_k5_drawing(convex_k5_rep(corner));
    CHECK(report.independent_crossing_pairs == oracle);
    for (const auto& e : report.crossing_pairs) {
        CHECK(e.crossings == 1);
        CHECK(e.parity == 1);
    }
}

TEST_CASE("derive_k5_drawing with interior points matches the straight-line oracle") {
    // triangle with two interior points: the classical one-crossing drawing
    std::vector<Point> corner{P(0, 0), P(24, 0), P(12, 21), P(11, 7), P(13, 8)};
    long long oracle = straight_crossings(corner);
    auto report = derive_k5_drawing(convex_k5_rep(corner));
    CHECK(report.independent_crossing_pairs == oracle);
    CHECK(oracle == 1);
}

TEST_CASE("derive_k5_drawing rejects missing incidences") {
    std::vector<Point> corner{P(0, 0), P(13, 0), P(17, 8), P(7, 17), P(-5, 9)};
    Representation rep = convex_k5_rep(corner);
    // break the A_1 / A_{1,2} incidence by moving the middle third away
    rep.sets[static_cast<size_t>(special_pair_index(5, 1, 2))] = {seg(P(100, 100), P(104, 104))};
    CHECK_THROWS_AS(derive_k5_drawing(rep), std::invalid_argument);
}

TEST_CASE("representation text round trip and svg output") {
    Representation rep = crossing_pair();
    rep.disk = Disk{P(0, 0), BigRat(10)};
    std::ostringstream os;
    write_representation(os, rep);
    std::istringstream is(os.str());
    Representation back = read_representation(is);
    CHECK(back.n == rep.n);
    CHECK(back.sets[0][0].pts == rep.sets[0][0].pts);
    REQUIRE(back.disk.has_value());
    CHECK(back.disk->radius == rep.disk->radius);

    write_svg(rep, "/tmp/graphlim_test.svg");
}
