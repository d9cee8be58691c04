#include "geometry_internal.hpp"
#include "graphlim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>

namespace graphlim {

using geomdetail::SegX;
using geomdetail::add;
using geomdetail::boxes_meet;
using geomdetail::dist2;
using geomdetail::explode_set;
using geomdetail::route_through;
using geomdetail::set_dist2;
using geomdetail::set_witness;
using geomdetail::pow2_below;
using geomdetail::snap_down;
using geomdetail::sqrt_lower;

namespace {

// integer stub direction candidates, spread over the circle
const int DIR_CANDIDATES[][2] = {
    {1, 0},  {0, 1},  {-1, 0}, {0, -1}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
    {2, 1},  {1, 2},  {-2, 1}, {-1, 2}, {2, -1}, {1, -2}, {-2, -1}, {-1, -2},
    {3, 1},  {1, 3},  {-3, 1}, {-1, 3}, {3, -1}, {1, -3}, {-3, -1}, {-1, -3},
    {3, 2},  {2, 3},  {-3, 2}, {-2, 3}, {3, -2}, {2, -3}, {-3, -2}, {-2, -3},
};
constexpr size_t DIR_COUNT = sizeof(DIR_CANDIDATES) / sizeof(DIR_CANDIDATES[0]);

// scale integer direction (dx,dy) to length in [len/2, len], exactly checked
std::optional<std::pair<BigRat, BigRat>> scaled_dir(int dx, int dy, const BigRat& len) {
    const BigRat norm2 = BigRat(dx) * BigRat(dx) + BigRat(dy) * BigRat(dy);
    const BigRat inv = sqrt_lower(BigRat(1) / norm2); // <= 1/|d|
    const BigRat sx = BigRat(dx) * len * inv;
    const BigRat sy = BigRat(dy) * len * inv;
    const BigRat got2 = sx * sx + sy * sy;
    if (got2 > len * len) return std::nullopt;
    if (got2 * BigRat(4) < len * len) return std::nullopt;
    return std::make_pair(sx, sy);
}

struct DirectedKey {
    int from, to;
    bool operator<(const DirectedKey& o) const {
        return from != o.from ? from < o.from : to < o.to;
    }
};

struct Pipeline {
    const Representation& in;
    uint64_t seed;
    bool outer;

    int n = 0;
    Graph g0;
    std::vector<std::vector<SegX>> base;    // input segments + stubs, per set
    BigRat eps;
    std::vector<Point> pvert;               // hub point of each set
    std::map<std::pair<int, int>, Point> pedge;
    std::vector<Point> specials;            // all p_i and p_ij
    BigRat eta;                             // tube half-width bound
    BigRat sep;                             // lower bound on special-point separation

    std::map<DirectedKey, std::vector<Point>> spine; // per directed edge

    Pipeline(const Representation& rep, uint64_t s, bool is_outer)
        : in(rep), seed(s), outer(is_outer), g0(0) {}

    // ---- stage B: separation scale --------------------------------------

    void compute_eps() {
        bool have = false;
        BigRat min_d2(0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g0.has_edge(i, j)) continue;
                BigRat d2 = set_dist2(base[static_cast<size_t>(i)], base[static_cast<size_t>(j)]);
                if (d2.is_zero())
                    throw std::logic_error("non-adjacent sets at distance zero");
                if (!have || d2 < min_d2) {
                    min_d2 = d2;
                    have = true;
                }
            }
        if (!have) {
            // all pairs intersect: fall back to the smallest feature scale
            bool first = true;
            for (const auto& segs : base)
                for (const auto& s : segs) {
                    BigRat l2 = dist2(s.a, s.b);
                    if (first || l2 < min_d2) {
                        min_d2 = l2;
                        first = false;
                    }
                }
            if (first) min_d2 = BigRat(1);
        }
        eps = sqrt_lower(min_d2) / BigRat(3);
        if (eps.sign() <= 0) throw std::logic_error("degenerate separation scale");
    }

    // ---- stage C: stubs and special points -------------------------------

    bool point_clear(const Point& p, int skip_set = -1) const {
        for (const auto& q : specials)
            if (q == p) return false;
        for (int s = 0; s < n; ++s) {
            if (s == skip_set) continue;
            for (const auto& seg : base[static_cast<size_t>(s)])
                if (geom::point_on_segment(p, seg.a, seg.b)) return false;
        }
        return true;
    }

    // a stub from `from` whose tip avoids all sets (except those through the
    // base point) and all previously chosen specials
    std::optional<Point> place_stub(int set_a, int set_b, const Point& from) {
        for (int li = 0; li < 4; ++li) {
            BigRat len = eps / BigRat(2 * (1 << li));
            for (size_t di = 0; di < DIR_COUNT; ++di) {
                auto sd = scaled_dir(DIR_CANDIDATES[di][0], DIR_CANDIDATES[di][1], len);
                if (!sd) continue;
                Point tip = add(from, sd->first, sd->second);
                // tip must lie on nothing at all
                bool ok = true;
                for (const auto& q : specials)
                    if (q == tip) ok = false;
                for (int s = 0; s < n && ok; ++s)
                    for (const auto& seg : base[static_cast<size_t>(s)]) {
                        if (geom::point_on_segment(tip, seg.a, seg.b)) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) continue;
                // stub interior must not pass through existing specials
                for (const auto& q : specials)
                    if (geom::point_on_segment(q, from, tip)) ok = false;
                if (!ok) continue;

                SegX stub;
                stub.a = from;
                stub.b = tip;
                stub.box();
                base[static_cast<size_t>(set_a)].push_back(stub);
                if (set_b >= 0) base[static_cast<size_t>(set_b)].push_back(stub);
                specials.push_back(tip);
                return tip;
            }
        }
        return std::nullopt;
    }

    Point set_anchor(int i) const {
        // a point of the set to hang the hub stub from
        const SegX& s = base[static_cast<size_t>(i)].front();
        return Point{(s.a.x + s.b.x) / BigRat(2), (s.a.y + s.b.y) / BigRat(2)};
    }

    // outer mode: the sets live inside the disk, and |x - c|^2 is convex
    // along a segment, so boundary contact happens exactly at a polyline
    // vertex; that vertex serves as the boundary point p_i
    Point outer_anchor(int i) const {
        const Disk& d = *in.disk;
        const BigRat r2 = d.radius * d.radius;
        for (const auto& s : base[static_cast<size_t>(i)]) {
            if (dist2(s.a, d.center) == r2) return s.a;
            if (dist2(s.b, d.center) == r2) return s.b;
        }
        throw std::invalid_argument("normalize_outer: a set misses the disk boundary");
    }

    void choose_points() {
        pvert.assign(static_cast<size_t>(n), Point{});
        for (int i = 0; i < n; ++i) {
            Point from = outer ? outer_anchor(i) : set_anchor(i);
            auto tip = place_stub(i, -1, from);
            if (!tip) throw NormalizeFailure("stub placement budget exhausted (hub point)");
            pvert[static_cast<size_t>(i)] = *tip;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!g0.has_edge(i, j)) continue;
                auto w = set_witness(base[static_cast<size_t>(i)], base[static_cast<size_t>(j)]);
                if (!w) throw std::logic_error("adjacent sets without a witness point");
                auto tip = place_stub(i, j, *w);
                if (!tip) throw NormalizeFailure("stub placement budget exhausted (edge point)");
                pedge[{i, j}] = *tip;
            }

        // separation of the special points drives the tube width
        bool first = true;
        BigRat min_d2(0);
        for (size_t a = 0; a < specials.size(); ++a)
            for (size_t b = a + 1; b < specials.size(); ++b) {
                BigRat d2 = dist2(specials[a], specials[b]);
                if (first || d2 < min_d2) {
                    min_d2 = d2;
                    first = false;
                }
            }
        sep = first ? eps : sqrt_lower(min_d2);
        if (sep.sign() <= 0) throw NormalizeFailure("coincident special points");
        // dyadic width keeps every derived offset on a power-of-two grid
        eta = pow2_below(std::min(eps / BigRat(12), sep / BigRat(5)));
        // tube half-width stays below a sixth of the separation scale
        if (!(eta < eps / BigRat(6))) throw std::logic_error("tube half-width exceeds eps/6");
    }

    // ---- stage D: spines --------------------------------------------------

    void build_spines() {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !g0.has_edge(i, j)) continue;
                const Point& from = pvert[static_cast<size_t>(i)];
                const Point& to = pedge[{std::min(i, j), std::max(i, j)}];
                auto r = route_through(base[static_cast<size_t>(i)], from, to);
                if (r.size() < 2) throw std::logic_error("spine routing failed");
                if (r.size() == 2) {
                    Point mid{(r[0].x + r[1].x) / BigRat(2), (r[0].y + r[1].y) / BigRat(2)};
                    r.insert(r.begin() + 1, mid);
                }
                spine[{i, j}] = std::move(r);
            }
    }

    // ---- stage E: perturbation -------------------------------------------

    std::map<DirectedKey, std::vector<Point>> jitter_spines(uint64_t round_seed) const {
        // high-entropy lattice: many spines can share a corridor, and the
        // inputs themselves may repeat directions exactly, so collisions
        // must be made astronomically unlikely rather than merely uncommon
        const BigRat grid = pow2_below(std::min(eps / BigRat(24), sep / BigRat(8))) /
                            BigRat(1ll << 32);
        std::map<DirectedKey, std::vector<Point>> out;
        uint64_t counter = 0;
        for (const auto& [key, pts] : spine) {
            std::vector<Point> q = pts;
            for (size_t m = 1; m + 1 < q.size(); ++m) {
                const long long ux =
                    static_cast<long long>(CounterRng::at(round_seed, 11, counter++) % ((1ull << 29) + 1)) -
                    (1ll << 28);
                const long long uy =
                    static_cast<long long>(CounterRng::at(round_seed, 11, counter++) % ((1ull << 29) + 1)) -
                    (1ll << 28);
                q[m] = add(q[m], BigRat(ux) * grid, BigRat(uy) * grid);
            }
            q.erase(std::unique(q.begin(), q.end()), q.end());
            out[key] = std::move(q);
        }
        return out;
    }

    bool spines_generic(const std::map<DirectedKey, std::vector<Point>>& sp) const {
        const bool trace2 = std::getenv("GRAPHLIM_SPINE_TRACE") != nullptr;
        auto why = [&](const char* m) {
            if (trace2) std::cerr << "[spines] fail: " << m << "\n";
            return false;
        };
        struct SegRef {
            Point a, b;
            int set;
            DirectedKey key;
        };
        std::vector<SegRef> segs;
        for (const auto& [key, pts] : sp) {
            if (pts.size() < 3) return why("short spine");
            for (size_t m = 0; m + 1 < pts.size(); ++m) {
                if (pts[m] == pts[m + 1]) return why("repeated point");
                segs.push_back({pts[m], pts[m + 1], key.from, key});
            }
        }
        // globally distinct directions
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j) {
                BigRat c = (segs[i].b.x - segs[i].a.x) * (segs[j].b.y - segs[j].a.y) -
                           (segs[i].b.y - segs[i].a.y) * (segs[j].b.x - segs[j].a.x);
                if (c.is_zero()) return why("parallel spine segments");
            }
        // interior breakpoints lie on their own spine only
        for (const auto& [key, pts] : sp) {
            for (size_t m = 1; m + 1 < pts.size(); ++m) {
                for (const auto& s : segs) {
                    if (s.key.from == key.from && s.key.to == key.to) continue;
                    if (geom::point_on_segment(pts[m], s.a, s.b)) return why("breakpoint on foreign spine");
                }
            }
        }
        // hub points on own set's spines only; edge points only on their two
        for (int i = 0; i < n; ++i)
            for (const auto& s : segs)
                if (s.set != i && geom::point_on_segment(pvert[static_cast<size_t>(i)], s.a, s.b))
                    return why("hub point on foreign spine");
        for (const auto& [e, p] : pedge)
            for (const auto& s : segs) {
                bool own = (s.key.from == e.first && s.key.to == e.second) ||
                           (s.key.from == e.second && s.key.to == e.first);
                if (!own && geom::point_on_segment(p, s.a, s.b)) return why("edge point on foreign spine");
            }
        // non-adjacent sets' spines must not meet
        for (size_t i = 0; i < segs.size(); ++i)
            for (size_t j = i + 1; j < segs.size(); ++j) {
                if (segs[i].set == segs[j].set) continue;
                if (g0.has_edge(segs[i].set, segs[j].set)) continue;
                if (geom::segment_meet(segs[i].a, segs[i].b, segs[j].a, segs[j].b).kind !=
                    geom::SegMeet::none)
                    return why("non-adjacent spines meet");
            }
        // no point on three spines, hubs excepted
        {
            std::vector<std::pair<Point, std::set<std::pair<int, int>>>> meets;
            for (size_t i = 0; i < segs.size(); ++i)
                for (size_t j = i + 1; j < segs.size(); ++j) {
                    if (segs[i].key.from == segs[j].key.from && segs[i].key.to == segs[j].key.to)
                        continue;
                    auto m = geom::segment_meet(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
                    if (m.kind == geom::SegMeet::overlap) return why("spine overlap");
                    if (m.kind == geom::SegMeet::none) continue;
                    bool is_hub = false;
                    for (const auto& p : pvert)
                        if (p == m.at) is_hub = true;
                    if (is_hub) continue;
                    bool merged = false;
                    for (auto& [q, curves] : meets)
                        if (q == m.at) {
                            curves.insert({segs[i].key.from, segs[i].key.to});
                            curves.insert({segs[j].key.from, segs[j].key.to});
                            merged = true;
                            break;
                        }
                    if (!merged)
                        meets.push_back({m.at,
                                         {{segs[i].key.from, segs[i].key.to},
                                          {segs[j].key.from, segs[j].key.to}}});
                }
            for (const auto& [q, curves] : meets)
                if (curves.size() >= 3) return why("triple spine point");
        }
        return true;
    }

    // ---- stage F: hubs and tubes -------------------------------------------

    std::vector<Polyline> build_closed_curves(int i,
                                              const std::map<DirectedKey, std::vector<Point>>& sp,
                                              int round) const {
        std::vector<Polyline> out;
        const BigRat scale_r = BigRat(1024 - round, 1024);
        const BigRat off_grid = pow2_below(eta) / BigRat(1ll << 34);
        // additive dither breaks exact ratio coincidences between snapped
        // values of different curves
        uint64_t dither_counter = 0;
        auto dither = [&]() {
            return BigRat(static_cast<long long>(
                       CounterRng::at(0xd17e5eedull + static_cast<uint64_t>(round), static_cast<uint64_t>(i),
                                      dither_counter++) %
                       (1ull << 20))) *
                   off_grid;
        };

        // hub quad; arm lengths vary by set and round so no two hub edges
        // anywhere are parallel
        {
            const Point& p = pvert[static_cast<size_t>(i)];
            auto arm = [&](int t) {
                const long long mult = 97 + ((7 * (4ll * i + t + 1) + 11ll * round) % 31);
                return snap_down(eta * BigRat(3, 4) * scale_r * BigRat(mult, 128), off_grid) - dither();
            };
            auto skew = [&](int t) { return BigRat(3 + ((2ll * i + t + round) % 7), 64); };
            Polyline hub;
            hub.closed = true;
            hub.pts = {add(p, arm(0), arm(0) * skew(0)), add(p, -arm(1) * skew(1), arm(1)),
                       add(p, -arm(2), -arm(2) * skew(2)), add(p, arm(3) * skew(3), -arm(3))};
            out.push_back(std::move(hub));
        }

        // one tube per incident edge
        std::vector<int> nbrs;
        for (int j = 0; j < n; ++j)
            if (j != i && g0.has_edge(i, j)) nbrs.push_back(j);
        for (size_t t = 0; t < nbrs.size(); ++t) {
            const auto& pts = sp.at({i, nbrs[t]});
            const size_t N = pts.size() - 1; // segment count

            // translate the start along the first segment
            const BigRat delta = eta * BigRat(static_cast<long long>(t) + 1,
                                              8 * (static_cast<long long>(nbrs.size()) + 1));
            const BigRat d1x = pts[1].x - pts[0].x, d1y = pts[1].y - pts[0].y;
            const BigRat len1_inv = sqrt_lower(BigRat(1) / (d1x * d1x + d1y * d1y));
            BigRat t_move = delta * len1_inv; // fraction of the first segment
            if (t_move > BigRat(1, 4)) t_move = BigRat(1, 4);
            t_move = pow2_below(t_move);
            Point start = add(pts[0], d1x * t_move, d1y * t_move);

            std::vector<Point> spts = pts;
            spts[0] = start;

            // offsets per breakpoint
            std::vector<std::pair<BigRat, BigRat>> off(spts.size());
            auto perp_scaled = [&](const BigRat& dx, const BigRat& dy) -> std::pair<BigRat, BigRat> {
                const BigRat inv = sqrt_lower(BigRat(1) / (dx * dx + dy * dy));
                BigRat ox = snap_down(-dy * inv * eta * BigRat(1, 2) * scale_r, off_grid) - dither();
                BigRat oy = snap_down(dx * inv * eta * BigRat(1, 2) * scale_r, off_grid) - dither();
                return {ox, oy};
            };
            off[0] = perp_scaled(spts[1].x - spts[0].x, spts[1].y - spts[0].y);
            off[spts.size() - 1] = perp_scaled(spts[spts.size() - 1].x - spts[spts.size() - 2].x,
                                               spts[spts.size() - 1].y - spts[spts.size() - 2].y);
            for (size_t m = 1; m + 1 < spts.size(); ++m) {
                const BigRat ax = spts[m].x - spts[m - 1].x, ay = spts[m].y - spts[m - 1].y;
                const BigRat bx = spts[m + 1].x - spts[m].x, by = spts[m + 1].y - spts[m].y;
                const BigRat ia = sqrt_lower(BigRat(1) / (ax * ax + ay * ay));
                const BigRat ib = sqrt_lower(BigRat(1) / (bx * bx + by * by));
                // averaged left normals, then clamped into [eta/8, eta]
                BigRat wx = -(ay * ia + by * ib), wy = ax * ia + bx * ib;
                const BigRat w2 = wx * wx + wy * wy;
                std::pair<BigRat, BigRat> o;
                if (w2.is_zero()) {
                    o = perp_scaled(ax, ay);
                } else {
                    const BigRat iw = sqrt_lower(BigRat(1) / w2);
                    o = {snap_down(wx * iw * eta * BigRat(1, 2) * scale_r, off_grid) - dither(),
                         snap_down(wy * iw * eta * BigRat(1, 2) * scale_r, off_grid) - dither()};
                }
                // fall back to a side normal when the snap degenerated
                const BigRat o2 = o.first * o.first + o.second * o.second;
                if (o2 * BigRat(64) < eta * eta || o2 > eta * eta) o = perp_scaled(ax, ay);
                off[m] = o;
            }

            // the two sides use different shrink factors per vertex, so no
            // wall is ever an exact translate of its opposite wall
            auto side_scale = [&](size_t m) {
                return BigRat(48 + ((7ll * i + 3ll * static_cast<long long>(t) +
                                     5ll * static_cast<long long>(m)) %
                                    16),
                              64);
            };
            Polyline tube;
            tube.closed = true;
            for (size_t m = 0; m < spts.size(); ++m)
                tube.pts.push_back(add(spts[m], off[m].first, off[m].second));
            for (size_t m = spts.size(); m-- > 0;) {
                const BigRat sc = side_scale(m);
                tube.pts.push_back(add(spts[m], -off[m].first * sc, -off[m].second * sc));
            }
            out.push_back(std::move(tube));
            (void)N;
        }
        return out;
    }

    // ---- stage G: arrangement, Eulerian merge, corner rounding -------------

    struct MergedCurve {
        std::vector<Point> pts; // closed
    };

    std::optional<MergedCurve> merge_set_curves(const std::vector<Polyline>& curves,
                                                const std::vector<SegX>& other_sets_segs) const;

    // ---- stage H/I: cut ---------------------------------------------------

    BigRat rout; // enlarged radius (outer mode)

    bool cut_open_outer(const Representation& merged, Representation& final_rep, int round);
    bool outer_contract_ok(const Representation& final_rep) const;

    Representation run();
};

// edge of the intra-set arrangement
struct ArrEdge {
    int u, v;       // node ids
    Point pu, pv;
};

std::optional<Pipeline::MergedCurve>
Pipeline::merge_set_curves(const std::vector<Polyline>& curves,
                           const std::vector<SegX>& other_sets_segs) const {
    struct CSeg {
        Point a, b;
        int curve, idx;
        SegX box_;
    };
    std::vector<CSeg> segs;
    for (size_t c = 0; c < curves.size(); ++c) {
        const auto& pl = curves[c];
        for (size_t s = 0; s < pl.pts.size(); ++s) {
            CSeg cs{pl.pts[s], pl.pts[(s + 1) % pl.pts.size()], static_cast<int>(c),
                    static_cast<int>(s), {}};
            cs.box_.a = cs.a;
            cs.box_.b = cs.b;
            cs.box_.box();
            segs.push_back(std::move(cs));
        }
    }
    const size_t S = segs.size();

    // pairwise classification; only proper interior crossings and shared
    // endpoints of consecutive edges of one curve are allowed
    std::vector<std::vector<std::pair<BigRat, Point>>> cuts(S); // interior crossing params
    for (size_t i = 0; i < S; ++i) {
        for (size_t j = i + 1; j < S; ++j) {
            const bool same_curve = segs[i].curve == segs[j].curve;
            const size_t len = curves[static_cast<size_t>(segs[i].curve)].pts.size();
            const bool consecutive =
                same_curve && (static_cast<size_t>((segs[i].idx + 1) % static_cast<int>(len)) ==
                                   static_cast<size_t>(segs[j].idx) ||
                               static_cast<size_t>((segs[j].idx + 1) % static_cast<int>(len)) ==
                                   static_cast<size_t>(segs[i].idx));
            if (!boxes_meet(segs[i].box_, segs[j].box_)) {
                if (consecutive) return std::nullopt; // must share an endpoint
                continue;
            }
            auto m = geomdetail::segment_meet_fast(segs[i].box_, segs[j].box_);
            if (consecutive) {
                // exactly the shared breakpoint
                if (m.kind != geom::SegMeet::touch) return std::nullopt;
                continue;
            }
            if (m.kind == geom::SegMeet::none) continue;
            if (m.kind != geom::SegMeet::cross) return std::nullopt;
            // interior crossing params on both
            auto param_on = [&](const CSeg& s, const Point& p) -> BigRat {
                const BigRat dx = s.b.x - s.a.x;
                if (!dx.is_zero()) return (p.x - s.a.x) / dx;
                return (p.y - s.a.y) / (s.b.y - s.a.y);
            };
            cuts[i].push_back({param_on(segs[i], m.at), m.at});
            cuts[j].push_back({param_on(segs[j], m.at), m.at});
        }
    }

    // nodes: curve breakpoints and crossing points
    std::vector<Point> nodes;
    auto node_id = [&](const Point& p) -> int {
        for (size_t k = 0; k < nodes.size(); ++k)
            if (nodes[k] == p) return static_cast<int>(k);
        nodes.push_back(p);
        return static_cast<int>(nodes.size()) - 1;
    };

    std::vector<ArrEdge> edges;
    for (size_t i = 0; i < S; ++i) {
        auto& cs = cuts[i];
        std::sort(cs.begin(), cs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Point prev = segs[i].a;
        for (const auto& [t, p] : cs) {
            if (p == prev) return std::nullopt; // crossing at a breakpoint
            edges.push_back({node_id(prev), node_id(p), prev, p});
            prev = p;
        }
        if (prev == segs[i].b) return std::nullopt;
        edges.push_back({node_id(prev), node_id(segs[i].b), prev, segs[i].b});
    }

    // incidences, degree check
    std::vector<std::vector<std::pair<int, int>>> inc(nodes.size()); // (edge, end 0/1)
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[static_cast<size_t>(edges[e].u)].push_back({static_cast<int>(e), 0});
        inc[static_cast<size_t>(edges[e].v)].push_back({static_cast<int>(e), 1});
    }
    for (const auto& I : inc)
        if (I.size() != 2 && I.size() != 4) return std::nullopt;

    // connectivity over edges
    {
        std::vector<int> comp(edges.size(), -1);
        std::vector<size_t> stack{0};
        if (edges.empty()) return std::nullopt;
        comp[0] = 0;
        while (!stack.empty()) {
            size_t e = stack.back();
            stack.pop_back();
            for (int end = 0; end < 2; ++end) {
                int v = end == 0 ? edges[e].u : edges[e].v;
                for (auto [f, fe] : inc[static_cast<size_t>(v)])
                    if (comp[static_cast<size_t>(f)] == -1) {
                        comp[static_cast<size_t>(f)] = 0;
                        stack.push_back(static_cast<size_t>(f));
                    }
            }
        }
        for (int c : comp)
            if (c == -1) return std::nullopt; // disconnected: hub failed its job
    }

    // rotation order at degree-4 nodes (exact angular sort)
    auto angle_less = [&](int node, const std::pair<int, int>& A, const std::pair<int, int>& B) {
        auto dir_of = [&](const std::pair<int, int>& he) {
            const ArrEdge& e = edges[static_cast<size_t>(he.first)];
            const Point& far = he.second == 0 ? e.pv : e.pu;
            const Point& at = nodes[static_cast<size_t>(node)];
            return std::make_pair(far.x - at.x, far.y - at.y);
        };
        auto [ax, ay] = dir_of(A);
        auto [bx, by] = dir_of(B);
        auto half = [](const BigRat& x, const BigRat& y) {
            return (y.sign() < 0 || (y.is_zero() && x.sign() < 0)) ? 1 : 0;
        };
        int ha = half(ax, ay), hb = half(bx, by);
        if (ha != hb) return ha < hb;
        return (ax * by - ay * bx).sign() > 0;
    };
    for (size_t v = 0; v < nodes.size(); ++v)
        std::sort(inc[v].begin(), inc[v].end(),
                  [&](const auto& A, const auto& B) { return angle_less(static_cast<int>(v), A, B); });

    // pairing state per node: for degree 4, flag selects {(0,1),(2,3)} or
    // {(1,2),(3,0)} in rotation order; both are non-crossing
    std::vector<char> pairing(nodes.size(), 0);
    auto partner = [&](int node, int slot) -> int {
        const auto& I = inc[static_cast<size_t>(node)];
        if (I.size() == 2) return slot ^ 1;
        if (!pairing[static_cast<size_t>(node)]) return slot ^ 1;        // (0,1),(2,3)
        return slot == 0 ? 3 : (slot == 3 ? 0 : (slot == 1 ? 2 : 1));    // (1,2),(3,0)
    };
    auto slot_of = [&](int node, int edge, int end) -> int {
        const auto& I = inc[static_cast<size_t>(node)];
        for (size_t s = 0; s < I.size(); ++s)
            if (I[s].first == edge && I[s].second == end) return static_cast<int>(s);
        return -1;
    };

    // circuits induced by the current pairing
    auto trace_circuits = [&](std::vector<int>& circuit_of) {
        circuit_of.assign(edges.size(), -1);
        int nc = 0;
        for (size_t e0 = 0; e0 < edges.size(); ++e0) {
            if (circuit_of[e0] != -1) continue;
            int e = static_cast<int>(e0), end = 1; // traverse from u to v first
            while (circuit_of[static_cast<size_t>(e)] == -1) {
                circuit_of[static_cast<size_t>(e)] = nc;
                int node = end == 1 ? edges[static_cast<size_t>(e)].v : edges[static_cast<size_t>(e)].u;
                int slot = slot_of(node, e, end);
                int ps = partner(node, slot);
                auto [ne, nend] = inc[static_cast<size_t>(node)][static_cast<size_t>(ps)];
                e = ne;
                end = nend ^ 1; // leave through the other endpoint
            }
            ++nc;
        }
        return nc;
    };

    std::vector<int> circuit_of;
    int nc = trace_circuits(circuit_of);
    int guard = 0;
    while (nc > 1) {
        if (++guard > static_cast<int>(nodes.size()) + 8) return std::nullopt;
        bool toggled = false;
        for (size_t v = 0; v < nodes.size() && !toggled; ++v) {
            if (inc[v].size() != 4) continue;
            // two passes: slots (0, partner(0)) and the remaining pair
            int c1 = circuit_of[static_cast<size_t>(inc[v][0].first)];
            int other_slot = pairing[v] ? 1 : 2;
            int c2 = circuit_of[static_cast<size_t>(inc[v][static_cast<size_t>(other_slot)].first)];
            if (c1 != c2) {
                pairing[v] ^= 1;
                toggled = true;
            }
        }
        if (!toggled) return std::nullopt; // disconnected pairing graph
        nc = trace_circuits(circuit_of);
    }

    // walk the single circuit, recording (edge, end) steps
    std::vector<std::pair<int, int>> walk;
    {
        std::vector<char> used(edges.size(), 0);
        int e = 0, end = 1;
        do {
            walk.push_back({e, end});
            used[static_cast<size_t>(e)] = 1;
            int node = end == 1 ? edges[static_cast<size_t>(e)].v : edges[static_cast<size_t>(e)].u;
            int slot = slot_of(node, e, end);
            int ps = partner(node, slot);
            auto [ne, nend] = inc[static_cast<size_t>(node)][static_cast<size_t>(ps)];
            e = ne;
            end = nend ^ 1;
        } while (!(e == 0 && end == 1));
        if (walk.size() != edges.size()) return std::nullopt;
    }

    // corner-cut radius per node: any value below a quarter of the true
    // clearance works, so a conservatively shrunk double estimate suffices
    // (the chord parameters are still checked exactly against rho)
    std::vector<BigRat> rho(nodes.size(), BigRat(0));
    std::vector<std::pair<double, double>> noded(nodes.size());
    for (size_t v = 0; v < nodes.size(); ++v)
        noded[v] = {nodes[v].x.to_double(), nodes[v].y.to_double()};
    auto dist2_pt_seg_d = [](double px, double py, double ax, double ay, double bx, double by) {
        const double dx = bx - ax, dy = by - ay;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
        t = std::min(1.0, std::max(0.0, t));
        const double qx = ax + t * dx - px, qy = ay + t * dy - py;
        return qx * qx + qy * qy;
    };
    std::vector<std::pair<double, double>> specd;
    for (const auto& q : specials) specd.push_back({q.x.to_double(), q.y.to_double()});
    for (size_t v = 0; v < nodes.size(); ++v) {
        if (inc[v].size() != 4) continue;
        const auto [px, py] = noded[v];
        double m2 = std::numeric_limits<double>::infinity();
        for (auto [e, end] : inc[v]) {
            const ArrEdge& ed = edges[static_cast<size_t>(e)];
            const double dx = ed.pu.x.to_double() - ed.pv.x.to_double();
            const double dy = ed.pu.y.to_double() - ed.pv.y.to_double();
            m2 = std::min(m2, dx * dx + dy * dy);
        }
        for (size_t w = 0; w < nodes.size(); ++w) {
            if (w == v) continue;
            const double dx = px - noded[w].first, dy = py - noded[w].second;
            m2 = std::min(m2, dx * dx + dy * dy);
        }
        for (const auto& [qx, qy] : specd) {
            const double dx = px - qx, dy = py - qy;
            m2 = std::min(m2, dx * dx + dy * dy);
        }
        for (const auto& s : other_sets_segs)
            m2 = std::min(m2, dist2_pt_seg_d(px, py, s.axd, s.ayd, s.bxd, s.byd));
        if (!(m2 > 0) || !std::isfinite(m2) || m2 > 1e18) return std::nullopt;
        const long long scaled = static_cast<long long>(std::ldexp(std::sqrt(m2) * 0.999999, 30));
        if (scaled <= 0) return std::nullopt;
        rho[v] = pow2_below(BigRat(scaled, 1ll << 30) / BigRat(4));
    }

    // realize the circuit with corner cuts at degree-4 nodes
    auto trimmed_point = [&](int node, int edge) -> Point {
        const ArrEdge& e = edges[static_cast<size_t>(edge)];
        const Point& at = nodes[static_cast<size_t>(node)];
        const Point& far = e.u == node ? e.pv : e.pu;
        const BigRat len2 = dist2(at, far);
        // largest dyadic t <= 1/2 with t^2 len2 <= rho^2
        BigRat t(1, 2);
        const BigRat r2 = rho[static_cast<size_t>(node)] * rho[static_cast<size_t>(node)];
        int it = 0;
        while (t * t * len2 > r2 && it++ < 80) t = t / BigRat(2);
        if (t * t * len2 > r2) return at; // degenerate; validation will catch
        return Point{at.x + t * (far.x - at.x), at.y + t * (far.y - at.y)};
    };

    MergedCurve out;
    for (size_t step = 0; step < walk.size(); ++step) {
        auto [e, end] = walk[step];
        const ArrEdge& ed = edges[static_cast<size_t>(e)];
        int enter = end == 1 ? ed.u : ed.v; // node where this edge starts
        int leave = end == 1 ? ed.v : ed.u; // node where it ends
        if (inc[static_cast<size_t>(enter)].size() == 2) {
            out.pts.push_back(nodes[static_cast<size_t>(enter)]);
        } else {
            out.pts.push_back(trimmed_point(enter, e));
        }
        if (inc[static_cast<size_t>(leave)].size() == 4)
            out.pts.push_back(trimmed_point(leave, e));
        // degree-2 leave nodes emit when the next edge starts
    }
    out.pts.erase(std::unique(out.pts.begin(), out.pts.end()), out.pts.end());
    while (out.pts.size() > 1 && out.pts.front() == out.pts.back()) out.pts.pop_back();
    if (out.pts.size() < 3) return std::nullopt;
    return out;
}

namespace {
BigRat dyadic_near(double x, int bits) {
    const double scaled = std::round(x * std::ldexp(1.0, bits));
    return BigRat(BigInt(static_cast<long long>(scaled)), BigInt(1) << static_cast<unsigned>(bits));
}
} // namespace

// rational point on the circle of radius R about c near angle theta,
// shifted by `offset` in the stereographic parameter; exact on the circle
static Point circle_point(const Point& c, const BigRat& R, double theta, const BigRat& offset) {
    const double half = std::tan(theta / 2.0);
    BigRat t;
    bool antipodal = false;
    if (std::fabs(half) <= 1.0) {
        t = dyadic_near(half, 20) + offset;
    } else {
        antipodal = true;
        t = dyadic_near(std::tan((theta - 3.14159265358979323846) / 2.0), 20) + offset;
    }
    const BigRat t2 = t * t;
    const BigRat den = BigRat(1) + t2;
    BigRat ux = R * (BigRat(1) - t2) / den;
    BigRat uy = R * BigRat(2) * t / den;
    if (antipodal) {
        ux = -ux;
        uy = -uy;
    }
    return Point{c.x + ux, c.y + uy};
}

bool Pipeline::cut_open_outer(const Representation& merged, Representation& final_rep, int round) {
    const Point& C = in.disk->center;
    BigRat maxd2 = in.disk->radius * in.disk->radius;
    for (const auto& set : merged.sets)
        for (const auto& pl : set)
            for (const auto& p : pl.pts) maxd2 = std::max(maxd2, dist2(p, C));
    rout = sqrt_lower(maxd2) * BigRat(9, 8);
    while (rout * rout <= maxd2) rout = rout * BigRat(9, 8);

    const BigRat w = BigRat(1, 1 << (6 + std::min(round, 12)));

    for (int i = 0; i < n; ++i) {
        const auto& cp = merged.sets[static_cast<size_t>(i)][0].pts;
        const size_t m = cp.size();
        const BigRat dx = pvert[static_cast<size_t>(i)].x - C.x;
        const BigRat dy = pvert[static_cast<size_t>(i)].y - C.y;

        // farthest intersection of the radius ray with the curve
        bool have = false;
        BigRat best_u(0), best_t(0);
        size_t best_s = 0;
        for (size_t s = 0; s < m; ++s) {
            const Point& a = cp[s];
            const Point& b = cp[(s + 1) % m];
            const BigRat ex = b.x - a.x, ey = b.y - a.y;
            const BigRat det = ex * dy - ey * dx;
            if (det.is_zero()) continue;
            const BigRat u = (ex * (a.y - C.y) - ey * (a.x - C.x)) / det;
            const BigRat t = (dx * (a.y - C.y) - dy * (a.x - C.x)) / det;
            if (t <= BigRat(0) || t >= BigRat(1) || u.sign() <= 0) continue;
            if (!have || u > best_u) {
                best_u = u;
                best_t = t;
                best_s = s;
                have = true;
            }
        }
        if (!have) return false;

        // meeting params on the cut segment
        const Point& a = cp[best_s];
        const Point& b = cp[(best_s + 1) % m];
        SegX segbox;
        segbox.a = a;
        segbox.b = b;
        segbox.box();
        auto param_of = [&](const Point& p) -> BigRat {
            const BigRat ddx = b.x - a.x;
            if (!ddx.is_zero()) return (p.x - a.x) / ddx;
            return (p.y - a.y) / (b.y - a.y);
        };
        std::vector<BigRat> params{BigRat(0), BigRat(1)};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& op = merged.sets[static_cast<size_t>(j)][0].pts;
            for (size_t s = 0; s < op.size(); ++s) {
                SegX other;
                other.a = op[s];
                other.b = op[(s + 1) % op.size()];
                other.box();
                if (!boxes_meet(segbox, other)) continue;
                auto mt = geomdetail::segment_meet_fast(segbox, other);
                if (mt.kind == geom::SegMeet::none) continue;
                if (mt.kind == geom::SegMeet::overlap) return false;
                params.push_back(param_of(mt.at));
            }
        }
        for (const auto& sp : specials)
            if (geom::point_on_segment(sp, a, b)) params.push_back(param_of(sp));
        std::sort(params.begin(), params.end());
        BigRat lo(0), hi(1);
        bool strict = true;
        for (const auto& t : params) {
            if (t == best_t) strict = false;
            if (t < best_t) lo = std::max(lo, t);
            if (t > best_t) hi = std::min(hi, t);
        }
        if (!strict) return false;

        const BigRat ta = best_t - (best_t - lo) / BigRat(4);
        const BigRat tb = best_t + (hi - best_t) / BigRat(4);
        const Point A{a.x + ta * (b.x - a.x), a.y + ta * (b.y - a.y)};
        const Point B{a.x + tb * (b.x - a.x), a.y + tb * (b.y - a.y)};

        const double theta = std::atan2(dy.to_double(), dx.to_double());
        const Point U = circle_point(C, rout, theta, -w);
        const Point W = circle_point(C, rout, theta, w);

        // attach circle points to the cut ends without crossing
        const Point *endA = &U, *endB = &W;
        if (geom::segment_meet(A, U, B, W).kind != geom::SegMeet::none) {
            endA = &W;
            endB = &U;
            if (geom::segment_meet(A, W, B, U).kind != geom::SegMeet::none) return false;
        }

        Polyline open;
        open.closed = false;
        open.pts.push_back(*endB);
        open.pts.push_back(B);
        for (size_t k = 1; k <= m; ++k) open.pts.push_back(cp[(best_s + k) % m]);
        open.pts.push_back(A);
        open.pts.push_back(*endA);
        open.pts.erase(std::unique(open.pts.begin(), open.pts.end()), open.pts.end());
        final_rep.sets[static_cast<size_t>(i)] = {std::move(open)};
    }
    final_rep.disk = Disk{C, rout};
    return true;
}

bool Pipeline::outer_contract_ok(const Representation& final_rep) const {
    const Point& C = in.disk->center;
    const BigRat r2 = rout * rout;
    for (int i = 0; i < n; ++i) {
        const auto& pts = final_rep.sets[static_cast<size_t>(i)][0].pts;
        if (dist2(pts.front(), C) != r2 || dist2(pts.back(), C) != r2) return false;
        for (size_t k = 1; k + 1 < pts.size(); ++k)
            if (!(dist2(pts[k], C) < r2)) return false;
    }
    return true;
}

// free gap on a closed curve: (segment index, param lo, param hi) with no
// inter-set meeting point inside
struct FreeGap {
    size_t seg;
    BigRat lo, hi;
};

std::optional<FreeGap> find_free_gap(const std::vector<Point>& closed_pts,
                                     const std::vector<SegX>& other_segs,
                                     const std::vector<Point>& avoid) {
    // approximate parameters with wide safety margins are enough here: the
    // final contract validation re-checks the cut exactly, so the gap
    // search may be floating point as long as cut points are conservative
    std::optional<FreeGap> best;
    double best_span = -1;
    const size_t m = closed_pts.size();
    for (size_t s = 0; s < m; ++s) {
        const Point& a = closed_pts[s];
        const Point& b = closed_pts[(s + 1) % m];
        SegX seg;
        seg.a = a;
        seg.b = b;
        seg.box();
        const double dxd = seg.bxd - seg.axd, dyd = seg.byd - seg.ayd;
        const double len_d = std::sqrt(dxd * dxd + dyd * dyd);
        if (!(len_d > 0)) continue;
        auto param_d = [&](double px, double py) {
            return ((px - seg.axd) * dxd + (py - seg.ayd) * dyd) / (len_d * len_d);
        };
        std::vector<double> params{0.0, 1.0};
        bool dead = false;
        for (const auto& o : other_segs) {
            if (!boxes_meet(seg, o)) continue;
            auto mt = geomdetail::segment_meet_approx(seg, o);
            if (mt.kind == geom::SegMeet::none) continue;
            if (mt.kind == geom::SegMeet::overlap) {
                dead = true;
                break;
            }
            params.push_back(param_d(mt.ax, mt.ay));
        }
        if (dead) continue;
        for (const auto& p : avoid) {
            const double px = p.x.to_double(), py = p.y.to_double();
            double t = std::min(1.0, std::max(0.0, param_d(px, py)));
            const double qx = seg.axd + t * dxd - px, qy = seg.ayd + t * dyd - py;
            if (qx * qx + qy * qy <= len_d * len_d * 0x1.0p-20) params.push_back(t);
        }
        std::sort(params.begin(), params.end());
        const double margin = 0x1.0p-10;
        for (size_t k = 0; k + 1 < params.size(); ++k) {
            const double lo = params[k] + margin, hi = params[k + 1] - margin;
            if (hi - lo <= 0) continue;
            const double span = (hi - lo) * len_d;
            if (span > best_span) {
                auto dyadic = [](double v) {
                    return BigRat(static_cast<long long>(std::ldexp(v, 30)), 1ll << 30);
                };
                best = FreeGap{s, dyadic(lo), dyadic(hi)};
                best_span = span;
            }
        }
    }
    return best;
}

std::vector<Point> cut_open(const std::vector<Point>& closed_pts, const FreeGap& gap) {
    const size_t m = closed_pts.size();
    const Point& a = closed_pts[gap.seg];
    const Point& b = closed_pts[(gap.seg + 1) % m];
    const BigRat ta = gap.lo + (gap.hi - gap.lo) / BigRat(3);
    const BigRat tb = gap.lo + (gap.hi - gap.lo) * BigRat(2, 3);
    const Point A{a.x + ta * (b.x - a.x), a.y + ta * (b.y - a.y)};
    const Point B{a.x + tb * (b.x - a.x), a.y + tb * (b.y - a.y)};
    std::vector<Point> out{B};
    for (size_t k = 1; k <= m; ++k) out.push_back(closed_pts[(gap.seg + k) % m]);
    out.push_back(A);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool polyline_simple(const Polyline& pl) {
    const size_t m = pl.segment_count();
    std::vector<SegX> segs(m);
    for (size_t s = 0; s < m; ++s) {
        segs[s].a = pl.pts[s];
        segs[s].b = pl.pts[(s + 1) % pl.pts.size()];
        segs[s].box();
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const bool consecutive = (j == i + 1) || (pl.closed && i == 0 && j == m - 1);
            if (!consecutive && !boxes_meet(segs[i], segs[j])) continue;
            auto kind = geomdetail::meet_kind_fast(segs[i], segs[j]);
            if (consecutive) {
                if (kind != geom::SegMeet::touch) return false;
            } else if (kind != geom::SegMeet::none) {
                return false;
            }
        }
    return true;
}

Representation Pipeline::run() {
    in.validate();
    n = in.n;
    g0 = intersection_graph(in);
    if (outer) {
        if (!in.disk) throw std::invalid_argument("normalize_outer needs a disk");
        const Disk& d = *in.disk;
        const BigRat r2 = d.radius * d.radius;
        for (int i = 0; i < n; ++i) {
            bool meets = false;
            for (const auto& pl : in.sets[static_cast<size_t>(i)])
                for (const auto& p : pl.pts) {
                    BigRat d2 = dist2(p, d.center);
                    if (d2 > r2) throw std::invalid_argument("normalize_outer: set leaves the disk");
                    if (d2 == r2) meets = true;
                }
            if (!meets) throw std::invalid_argument("normalize_outer: a set misses the disk boundary");
        }
    }
    if (n == 0) {
        Representation out;
        out.n = 0;
        out.disk = in.disk;
        return out;
    }

    base.clear();
    for (int i = 0; i < n; ++i) base.push_back(explode_set(in.sets[static_cast<size_t>(i)]));
    compute_eps();
    choose_points();
    build_spines();

    const int ROUNDS = 48;
    const bool trace = std::getenv("GRAPHLIM_NORMALIZE_TRACE") != nullptr;
    auto note = [&](int round, const char* stage) {
        if (trace) std::cerr << "[normalize] round " << round << " failed: " << stage << "\n";
    };
    CounterRng rng(seed);
    for (int round = 0; round < ROUNDS; ++round) {
        auto sp = jitter_spines(rng.derive(static_cast<uint64_t>(round)));
        if (!spines_generic(sp)) {
            note(round, "spine genericity");
            continue;
        }

        // stage F curves per set
        std::vector<std::vector<Polyline>> closed(static_cast<size_t>(n));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            closed[static_cast<size_t>(i)] = build_closed_curves(i, sp, round);
            for (const auto& pl : closed[static_cast<size_t>(i)]) {
                try {
                    pl.validate();
                } catch (const std::exception&) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            note(round, "tube polyline validity");
            continue;
        }

        // stage G: merge each set into one simple closed curve
        std::vector<SegX> all_other;
        Representation merged;
        merged.n = n;
        merged.sets.resize(static_cast<size_t>(n));
        for (int i = 0; i < n && ok; ++i) {
            std::vector<SegX> others;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (const auto& pl : closed[static_cast<size_t>(j)])
                    for (size_t s = 0; s < pl.pts.size(); ++s) {
                        SegX sx;
                        sx.a = pl.pts[s];
                        sx.b = pl.pts[(s + 1) % pl.pts.size()];
                        sx.box();
                        others.push_back(std::move(sx));
                    }
            }
            auto mc = merge_set_curves(closed[static_cast<size_t>(i)], others);
            if (!mc) {
                if (trace) std::cerr << "[normalize] round " << round << " failed: merge of set " << i << "\n";
                ok = false;
                break;
            }
            Polyline pl;
            pl.closed = true;
            pl.pts = std::move(mc->pts);
            merged.sets[static_cast<size_t>(i)] = {std::move(pl)};
        }
        if (!ok) continue;

        // closed-curve validation: simplicity, graph, position
        for (int i = 0; i < n && ok; ++i)
            ok = polyline_simple(merged.sets[static_cast<size_t>(i)][0]);
        if (!ok) {
            note(round, "closed-curve simplicity");
            continue;
        }
        try {
            if (!(intersection_graph(merged) == g0)) {
                note(round, "closed-curve graph mismatch");
                continue;
            }
            auto pos = check_general_position(merged);
            if (!pos.pass) {
                if (trace)
                    std::cerr << "[normalize] round " << round << " failed position: triples "
                              << pos.triple_points << " improper " << pos.improper_crossings
                              << " parallel " << pos.coincident_direction_pairs << " overlap "
                              << pos.infinite_intersection_pairs << "\n";
                continue;
            }
        } catch (const std::exception& e) {
            if (trace) std::cerr << "[normalize] round " << round << " exception: " << e.what() << "\n";
            continue;
        }

        // stage I: cut open (outer mode extends to the enlarged circle)
        Representation final_rep;
        final_rep.n = n;
        final_rep.sets.resize(static_cast<size_t>(n));
        if (!outer) {
            final_rep.disk = in.disk;
            bool cut_ok = true;
            for (int i = 0; i < n && cut_ok; ++i) {
                const auto& closed_pl = merged.sets[static_cast<size_t>(i)][0];
                std::vector<SegX> others;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    for (const auto& pl : merged.sets[static_cast<size_t>(j)])
                        for (size_t s = 0; s < pl.pts.size(); ++s) {
                            SegX sx;
                            sx.a = pl.pts[s];
                            sx.b = pl.pts[(s + 1) % pl.pts.size()];
                            sx.box();
                            others.push_back(std::move(sx));
                        }
                }
                auto gap = find_free_gap(closed_pl.pts, others, specials);
                if (!gap) {
                    note(round, "no free gap for the cut");
                    cut_ok = false;
                    break;
                }
                Polyline open;
                open.closed = false;
                open.pts = cut_open(closed_pl.pts, *gap);
                final_rep.sets[static_cast<size_t>(i)] = {std::move(open)};
            }
            if (!cut_ok) continue;
        } else {
            if (!cut_open_outer(merged, final_rep, round)) {
                note(round, "outer cut");
                continue;
            }
        }

        // final contract check
        try {
            bool good = true;
            for (int i = 0; i < n && good; ++i) {
                const auto& pl = final_rep.sets[static_cast<size_t>(i)][0];
                good = !pl.closed && polyline_simple(pl);
            }
            if (!good) {
                note(round, "final simplicity");
                continue;
            }
            if (!(intersection_graph(final_rep) == g0)) {
                note(round, "final graph mismatch");
                continue;
            }
            if (!check_general_position(final_rep).pass) {
                note(round, "final position");
                continue;
            }
            if (outer && !outer_contract_ok(final_rep)) {
                note(round, "outer contract");
                continue;
            }
        } catch (const std::exception& e) {
            if (trace) std::cerr << "[normalize] round " << round << " exception: " << e.what() << "\n";
            continue;
        }
        return final_rep;
    }
    throw NormalizeFailure("normalize: perturbation budget exhausted after 48 rounds");
}

} // namespace

Representation normalize(const Representation& rep, uint64_t seed) {
    Pipeline p(rep, seed, false);
    return p.run();
}

Representation normalize_outer(const Representation& rep, uint64_t seed) {
    Pipeline p(rep, seed, true);
    return p.run();
}

} // namespace graphlim
