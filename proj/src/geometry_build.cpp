#include "geometry_internal.hpp"
#include "graphlim/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace graphlim {

using geomdetail::SegX;
using geomdetail::add;
using geomdetail::dist2;
using geomdetail::explode_set;
using geomdetail::route_through;
using geomdetail::set_witness;
using geomdetail::sqrt_lower;

namespace {

Point circle_param_point(const Disk& d, const BigRat& t) {
    const BigRat t2 = t * t;
    const BigRat den = BigRat(1) + t2;
    return Point{d.center.x + d.radius * (BigRat(1) - t2) / den,
                 d.center.y + d.radius * BigRat(2) * t / den};
}

// circular order of the nonempty parts in which no two quotient edges
// interleave; exists because the quotient is outerplanar (one-page book
// embeddings are exactly the outerplanar graphs)
std::optional<std::vector<int>> noninterleaving_order(int k,
                                                      const std::vector<std::pair<int, int>>& edges) {
    if (k > 9) throw std::domain_error("build_outerstring_from_cover: more than 9 nonempty parts");
    if (k == 0) return std::vector<int>{};
    std::vector<int> order(static_cast<size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(static_cast<size_t>(k));
    do {
        for (int i = 0; i < k; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        bool ok = true;
        for (size_t e = 0; e < edges.size() && ok; ++e)
            for (size_t f = e + 1; f < edges.size() && ok; ++f) {
                int a = pos[static_cast<size_t>(edges[e].first)];
                int b = pos[static_cast<size_t>(edges[e].second)];
                int c = pos[static_cast<size_t>(edges[f].first)];
                int d = pos[static_cast<size_t>(edges[f].second)];
                if (a == c || a == d || b == c || b == d) continue;
                auto between = [&](int x, int lo, int hi) {
                    // strictly between lo and hi going clockwise lo -> hi
                    if (lo < hi) return lo < x && x < hi;
                    return x > lo || x < hi;
                };
                if (between(c, a, b) != between(d, a, b)) ok = false;
            }
        if (ok) return order;
    } while (order[0] == 0 && std::next_permutation(order.begin() + 1, order.end()));
    return std::nullopt;
}

} // namespace

Representation build_outerstring_from_cover(const Graph& g, const VertexPartition& cover,
                                            const Disk& disk) {
    if (cover.n != g.n()) throw std::invalid_argument("cover size mismatch");
    cover.validate();
    for (const auto& part : cover.parts)
        if (!is_clique(g, part)) throw std::invalid_argument("cover parts must be cliques");
    if (!is_outerplanar(quotient(g, cover)))
        throw std::invalid_argument("cover quotient is not outerplanar");

    // nonempty parts and their quotient edges
    std::vector<int> part_of(static_cast<size_t>(g.n()), -1);
    std::vector<int> nonempty;
    for (size_t p = 0; p < cover.parts.size(); ++p) {
        if (cover.parts[p].empty()) continue;
        for (int v : cover.parts[p]) part_of[static_cast<size_t>(v)] = static_cast<int>(nonempty.size());
        nonempty.push_back(static_cast<int>(p));
    }
    const int k = static_cast<int>(nonempty.size());

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> bundles; // part pair -> edges
    for (auto [u, v] : g.edges()) {
        int a = part_of[static_cast<size_t>(u)], b = part_of[static_cast<size_t>(v)];
        if (a == b) continue;
        if (a > b) std::swap(a, b), std::swap(u, v);
        bundles[{a, b}].push_back({u, v}); // u in part a, v in part b
    }
    std::vector<std::pair<int, int>> qedges;
    for (const auto& [key, list] : bundles) qedges.push_back(key);

    auto order = noninterleaving_order(k, qedges);
    if (!order) throw std::logic_error("outerplanar quotient admits no one-page order");

    // boundary points in that circular order (exactly on the circle)
    std::vector<Point> vpt(static_cast<size_t>(k));
    for (int rank = 0; rank < k; ++rank) {
        const BigRat t = BigRat(-2) + BigRat(4ll * rank, std::max(k, 1));
        vpt[static_cast<size_t>((*order)[static_cast<size_t>(rank)])] = circle_param_point(disk, t);
    }

    // clearance between non-adjacent chords and from chords to other
    // boundary points bounds the bundle offsets
    BigRat clear2(0);
    bool have = false;
    auto upd = [&](const BigRat& d2) {
        if (!have || d2 < clear2) {
            clear2 = d2;
            have = true;
        }
    };
    for (size_t e = 0; e < qedges.size(); ++e) {
        const Point& a = vpt[static_cast<size_t>(qedges[e].first)];
        const Point& b = vpt[static_cast<size_t>(qedges[e].second)];
        for (size_t f = e + 1; f < qedges.size(); ++f) {
            if (qedges[e].first == qedges[f].first || qedges[e].first == qedges[f].second ||
                qedges[e].second == qedges[f].first || qedges[e].second == qedges[f].second)
                continue;
            const Point& c = vpt[static_cast<size_t>(qedges[f].first)];
            const Point& d = vpt[static_cast<size_t>(qedges[f].second)];
            upd(geom::dist2_segments(a, b, c, d));
        }
        for (int p = 0; p < k; ++p) {
            if (p == qedges[e].first || p == qedges[e].second) continue;
            upd(geom::dist2_point_segment(vpt[static_cast<size_t>(p)], a, b));
        }
    }
    BigRat reach = have ? sqrt_lower(clear2) / BigRat(4) : disk.radius / BigRat(8);
    if (reach.sign() <= 0) throw std::logic_error("degenerate chord clearance");

    size_t max_bundle = 1;
    for (const auto& [key, list] : bundles) max_bundle = std::max(max_bundle, list.size());

    Representation out;
    out.n = g.n();
    out.sets.resize(static_cast<size_t>(g.n()));
    out.disk = disk;

    for (const auto& [key, list] : bundles) {
        const Point& va = vpt[static_cast<size_t>(key.first)];
        const Point& vb = vpt[static_cast<size_t>(key.second)];
        const BigRat cx = vb.x - va.x, cy = vb.y - va.y;
        const BigRat inv_len = sqrt_lower(BigRat(1) / (cx * cx + cy * cy));
        const BigRat px = -cy * inv_len, py = cx * inv_len; // approx unit perpendicular

        for (size_t e = 0; e < list.size(); ++e) {
            const BigRat off = reach * BigRat(static_cast<long long>(e) + 1,
                                              static_cast<long long>(max_bundle) + 1);
            const Point m1 = add(va, cx / BigRat(3) + px * off, cy / BigRat(3) + py * off);
            const Point m2 = add(va, cx * BigRat(2, 3) + px * off, cy * BigRat(2, 3) + py * off);
            const Point amid{(m1.x + m2.x) / BigRat(2), (m1.y + m2.y) / BigRat(2)};
            auto [x, y] = list[e];
            Polyline hx, hy;
            hx.pts = {va, m1, amid};
            hy.pts = {vb, m2, amid};
            out.sets[static_cast<size_t>(x)].push_back(std::move(hx));
            out.sets[static_cast<size_t>(y)].push_back(std::move(hy));
        }
    }

    // members with no cross-part edge get a whisker at their boundary point
    for (size_t p = 0; p < cover.parts.size(); ++p) {
        if (cover.parts[p].empty()) continue;
        int local = -1;
        for (size_t q = 0; q < nonempty.size(); ++q)
            if (nonempty[q] == static_cast<int>(p)) local = static_cast<int>(q);
        const Point& va = vpt[static_cast<size_t>(local)];
        const BigRat wx = disk.center.x - va.x, wy = disk.center.y - va.y;
        const BigRat inv = sqrt_lower(BigRat(1) / (wx * wx + wy * wy));
        int member_rank = 0;
        for (int v : cover.parts[p]) {
            ++member_rank;
            if (!out.sets[static_cast<size_t>(v)].empty()) continue;
            const BigRat len = reach * BigRat(member_rank, 2ll * (static_cast<long long>(cover.parts[p].size()) + 1));
            Polyline whisk;
            whisk.pts = {va, add(va, wx * inv * len, wy * inv * len)};
            out.sets[static_cast<size_t>(v)].push_back(std::move(whisk));
        }
    }

    if (!(intersection_graph(out) == g))
        throw std::logic_error("outer-string construction failed its own graph check");
    return out;
}

K5CrossingReport derive_k5_drawing(const Representation& rep) {
    if (rep.n != 15)
        throw std::invalid_argument("derive_k5_drawing expects 15 sets (5 singletons, 10 pairs)");
    rep.validate();

    std::vector<std::vector<SegX>> segs;
    for (int v = 0; v < 15; ++v) segs.push_back(explode_set(rep.sets[static_cast<size_t>(v)]));

    auto set_of_singleton = [&](int i) { return special_singleton_index(5, i); };
    auto set_of_pair = [&](int i, int j) {
        return special_pair_index(5, std::min(i, j), std::max(i, j));
    };

    // selected points: v_i in A_i and witnesses v_ij in A_i cap A_ij
    std::vector<Point> vsel(5);
    for (int i = 1; i <= 5; ++i)
        vsel[static_cast<size_t>(i - 1)] =
            rep.sets[static_cast<size_t>(set_of_singleton(i))].front().pts.front();

    std::map<std::pair<int, int>, Point> wit;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            auto w = set_witness(segs[static_cast<size_t>(set_of_singleton(i))],
                                 segs[static_cast<size_t>(set_of_pair(i, j))]);
            if (!w)
                throw std::invalid_argument("derive_k5_drawing: A_" + std::to_string(i) +
                                            " does not meet A_{" + std::to_string(std::min(i, j)) +
                                            "," + std::to_string(std::max(i, j)) + "}");
            wit[{i, j}] = *w;
        }

    // e_ij through A_i, A_ij, A_j
    std::map<std::pair<int, int>, std::vector<Point>> curve;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            auto part1 = route_through(segs[static_cast<size_t>(set_of_singleton(i))],
                                       vsel[static_cast<size_t>(i - 1)], wit[{i, j}]);
            auto part2 = route_through(segs[static_cast<size_t>(set_of_pair(i, j))], wit[{i, j}],
                                       wit[{j, i}]);
            auto part3 = route_through(segs[static_cast<size_t>(set_of_singleton(j))], wit[{j, i}],
                                       vsel[static_cast<size_t>(j - 1)]);
            if (part1.empty() || part2.empty() || part3.empty())
                throw std::invalid_argument("derive_k5_drawing: routing failed inside a set");
            std::vector<Point> e = part1;
            e.insert(e.end(), part2.begin(), part2.end());
            e.insert(e.end(), part3.begin(), part3.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            curve[{i, j}] = std::move(e);
        }

    K5CrossingReport report;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int p = i + 1; p <= 5; ++p)
                for (int q = p + 1; q <= 5; ++q) {
                    if (p == j || q == j) continue; // pairs must be disjoint
                    const auto& e1 = curve[{i, j}];
                    const auto& e2 = curve[{p, q}];
                    // distinct proper crossing points
                    std::vector<Point> crossings;
                    for (size_t s = 0; s + 1 < e1.size(); ++s)
                        for (size_t t = 0; t + 1 < e2.size(); ++t) {
                            auto m = geom::segment_meet(e1[s], e1[s + 1], e2[t], e2[t + 1]);
                            if (m.kind != geom::SegMeet::cross) continue;
                            bool seen = false;
                            for (const auto& c : crossings)
                                if (c == m.at) seen = true;
                            if (!seen) crossings.push_back(m.at);
                        }
                    if (!crossings.empty()) {
                        K5CrossingReport::PairEntry entry;
                        entry.edge1 = {i, j};
                        entry.edge2 = {p, q};
                        entry.crossings = static_cast<long long>(crossings.size());
                        entry.parity = static_cast<int>(crossings.size() % 2);
                        report.crossing_pairs.push_back(entry);
                        ++report.independent_crossing_pairs;
                    }
                }
    return report;
}

} // namespace graphlim
