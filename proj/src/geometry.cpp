#include "graphlim/geometry.hpp"
#include "geometry_internal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace graphlim {

void Polyline::validate() const {
    if (pts.size() < 2) throw std::invalid_argument("polyline needs at least two points");
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1]) throw std::invalid_argument("consecutive polyline points must be distinct");
    if (closed) {
        // closed curves repeat no vertex at all
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] == pts[j]) throw std::invalid_argument("closed polyline repeats a vertex");
    }
}

namespace geom {

int orient(const Point& a, const Point& b, const Point& c) {
    BigRat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    if ((p.x < a.x && p.x < b.x) || (p.x > a.x && p.x > b.x)) return false;
    if ((p.y < a.y && p.y < b.y) || (p.y > a.y && p.y > b.y)) return false;
    return true;
}

SegMeet segment_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    SegMeet m;
    const BigRat dx1 = b.x - a.x, dy1 = b.y - a.y;
    const BigRat dx2 = d.x - c.x, dy2 = d.y - c.y;
    const BigRat denom = dx1 * dy2 - dy1 * dx2;

    if (!denom.is_zero()) {
        const BigRat ex = c.x - a.x, ey = c.y - a.y;
        const BigRat t = (ex * dy2 - ey * dx2) / denom; // along [a,b]
        const BigRat s = (ex * dy1 - ey * dx1) / denom; // along [c,d]
        const BigRat zero(0), one(1);
        if (t < zero || t > one || s < zero || s > one) return m;
        m.at = Point{a.x + t * dx1, a.y + t * dy1};
        const bool interior1 = t > zero && t < one;
        const bool interior2 = s > zero && s < one;
        m.kind = (interior1 && interior2) ? SegMeet::cross : SegMeet::touch;
        return m;
    }

    // parallel
    if (orient(a, b, c) != 0) return m; // distinct parallel lines
    // collinear: project on a non-degenerate axis of [a,b]
    auto param = [&](const Point& p) -> BigRat {
        if (!dx1.is_zero()) return (p.x - a.x) / dx1;
        return (p.y - a.y) / dy1;
    };
    BigRat tc = param(c), td = param(d);
    if (tc > td) std::swap(tc, td);
    const BigRat lo = std::max(BigRat(0), tc);
    const BigRat hi = std::min(BigRat(1), td);
    if (lo > hi) return m;
    if (lo == hi) {
        m.kind = SegMeet::touch;
        m.at = Point{a.x + lo * dx1, a.y + lo * dy1};
        return m;
    }
    m.kind = SegMeet::overlap;
    const BigRat mid = (lo + hi) / BigRat(2);
    m.at = Point{a.x + mid * dx1, a.y + mid * dy1};
    return m;
}

BigRat dist2_point_segment(const Point& p, const Point& a, const Point& b) {
    const BigRat dx = b.x - a.x, dy = b.y - a.y;
    const BigRat len2 = dx * dx + dy * dy;
    BigRat t(0);
    if (!len2.is_zero()) {
        t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
        if (t.sign() < 0) t = BigRat(0);
        if (t > BigRat(1)) t = BigRat(1);
    }
    const BigRat qx = a.x + t * dx - p.x;
    const BigRat qy = a.y + t * dy - p.y;
    return qx * qx + qy * qy;
}

BigRat dist2_segments(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segment_meet(a, b, c, d).kind != SegMeet::none) return BigRat(0);
    BigRat best = dist2_point_segment(a, c, d);
    best = std::min(best, dist2_point_segment(b, c, d));
    best = std::min(best, dist2_point_segment(c, a, b));
    best = std::min(best, dist2_point_segment(d, a, b));
    return best;
}

} // namespace geom

namespace {

using geomdetail::SegX;
using geomdetail::boxes_meet;
using geomdetail::segment_meet_fast;

struct Seg {
    SegX sx;
    int set = -1;       // owning vertex
    int piece = -1;     // polyline index within the set
    int index = -1;     // segment index within the polyline
};

std::vector<Seg> explode(const Representation& rep) {
    std::vector<Seg> out;
    for (int v = 0; v < rep.n; ++v) {
        for (size_t pi = 0; pi < rep.sets[static_cast<size_t>(v)].size(); ++pi) {
            const Polyline& pl = rep.sets[static_cast<size_t>(v)][pi];
            const size_t m = pl.segment_count();
            for (size_t s = 0; s < m; ++s) {
                Seg seg;
                seg.sx.a = pl.pts[s];
                seg.sx.b = pl.pts[(s + 1) % pl.pts.size()];
                seg.set = v;
                seg.piece = static_cast<int>(pi);
                seg.index = static_cast<int>(s);
                seg.sx.box();
                out.push_back(std::move(seg));
            }
        }
    }
    return out;
}

} // namespace

void Representation::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(sets.size()) != n) throw std::invalid_argument("set count mismatch");
    for (int v = 0; v < n; ++v) {
        const auto& pls = sets[static_cast<size_t>(v)];
        if (pls.empty()) throw std::invalid_argument("every vertex set must be nonempty");
        for (const auto& pl : pls) pl.validate();
        // segment-adjacency connectivity of the set
        std::vector<geomdetail::SegX> segs = geomdetail::explode_set(pls);
        std::vector<int> comp(segs.size(), -1);
        std::vector<size_t> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < segs.size(); ++w) {
                if (comp[w] != -1 || !geomdetail::boxes_meet(segs[u], segs[w])) continue;
                if (geomdetail::meet_kind_fast(segs[u], segs[w]) == geom::SegMeet::none) continue;
                comp[w] = 0;
                stack.push_back(w);
            }
        }
        for (size_t w = 0; w < segs.size(); ++w)
            if (comp[w] == -1)
                throw std::invalid_argument("vertex set is not connected (segment adjacency)");
    }
}

Graph intersection_graph(const Representation& rep) {
    rep.validate();
    auto segs = explode(rep);
    Graph g(rep.n);
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].set == segs[j].set) continue;
            if (g.has_edge(segs[i].set, segs[j].set)) continue;
            if (!boxes_meet(segs[i].sx, segs[j].sx)) continue;
            if (geomdetail::meet_kind_fast(segs[i].sx, segs[j].sx) != geom::SegMeet::none)
                g.add_edge(segs[i].set, segs[j].set);
        }
    }
    return g;
}

PositionReport check_general_position(const Representation& rep) {
    rep.validate();
    auto segs = explode(rep);
    PositionReport report;

    // pairwise meeting points between distinct sets.  Approximate points
    // with certified error radii are clustered first; only hits that might
    // coincide get exact coordinates and exact comparison.
    struct Hit {
        double x, y, err;
        geom::SegMeet::Kind kind;
        size_t i, j;
        bool has_exact;
        Point at;
    };
    std::vector<Hit> hits;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].set == segs[j].set) continue;
            if (!boxes_meet(segs[i].sx, segs[j].sx)) continue;
            auto m = geomdetail::segment_meet_approx(segs[i].sx, segs[j].sx);
            if (m.kind == geom::SegMeet::none) continue;
            if (m.kind == geom::SegMeet::overlap) {
                ++report.infinite_intersection_pairs;
                continue;
            }
            hits.push_back({m.ax, m.ay, m.approx_err, m.kind, i, j, m.has_exact, m.at});
        }
    }

    // union-find clustering with a sorted sweep on x
    std::vector<size_t> order(hits.size()), parent(hits.size());
    std::iota(order.begin(), order.end(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return hits[a].x < hits[b].x; });
    double max_err = 0;
    for (const auto& h : hits) max_err = std::max(max_err, h.err);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const Hit& a = hits[order[oi]];
        for (size_t oj = oi + 1; oj < order.size(); ++oj) {
            const Hit& b = hits[order[oj]];
            if (b.x - a.x > a.err + max_err) break;
            if (std::fabs(b.y - a.y) <= a.err + b.err && b.x - a.x <= a.err + b.err)
                parent[find(order[oi])] = find(order[oj]);
        }
    }
    std::map<size_t, std::vector<size_t>> clusters;
    for (size_t h = 0; h < hits.size(); ++h) clusters[find(h)].push_back(h);

    auto exact_of = [&](Hit& h) -> const Point& {
        if (!h.has_exact) {
            h.at = geomdetail::meet_point_exact(segs[h.i].sx, segs[h.j].sx);
            h.has_exact = true;
        }
        return h.at;
    };

    for (auto& [root, members] : clusters) {
        // split the cluster into exact-equality groups (usually size 1)
        std::vector<std::vector<size_t>> groups;
        if (members.size() == 1) {
            groups.push_back(members);
        } else {
            for (size_t h : members) {
                bool placed = false;
                for (auto& g : groups) {
                    if (exact_of(hits[h]) == exact_of(hits[g[0]])) {
                        g.push_back(h);
                        placed = true;
                        break;
                    }
                }
                if (!placed) groups.push_back({h});
            }
        }
        for (const auto& g : groups) {
            ++report.intersection_points;
            std::set<int> sets;
            std::map<int, std::set<size_t>> segs_through;
            bool all_cross = true;
            for (size_t h : g) {
                sets.insert(segs[hits[h].i].set);
                sets.insert(segs[hits[h].j].set);
                segs_through[segs[hits[h].i].set].insert(hits[h].i);
                segs_through[segs[hits[h].j].set].insert(hits[h].j);
                all_cross = all_cross && hits[h].kind == geom::SegMeet::cross;
            }
            if (sets.size() >= 3) {
                ++report.triple_points;
                continue;
            }
            bool proper = all_cross;
            for (auto& [s, through] : segs_through)
                if (through.size() != 1) proper = false;
            if (!proper) ++report.improper_crossings;
        }
    }

    // pairwise distinct segment directions across distinct vertex sets,
    // prefiltered by a conservative double angle comparison.  Collinear
    // fragments of one curve are not counted: smoothing a curve at its
    // self-crossings necessarily leaves fragments of a segment on a common
    // line, and only cross-set coincidences can produce improper contact.
    {
        struct Dir {
            double angle;
            size_t idx;
        };
        std::vector<Dir> dirs;
        dirs.reserve(segs.size());
        for (size_t i = 0; i < segs.size(); ++i) {
            double dx = segs[i].sx.bxd - segs[i].sx.axd;
            double dy = segs[i].sx.byd - segs[i].sx.ayd;
            double ang = std::atan2(dy, dx);
            if (ang < 0) ang += 3.14159265358979323846; // directions are unsigned
            dirs.push_back({ang, i});
        }
        std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) { return a.angle < b.angle; });
        auto exactly_parallel = [&](size_t i, size_t j) {
            if (segs[i].set == segs[j].set) return false;
            BigRat c = (segs[i].sx.b.x - segs[i].sx.a.x) * (segs[j].sx.b.y - segs[j].sx.a.y) -
                       (segs[i].sx.b.y - segs[i].sx.a.y) * (segs[j].sx.b.x - segs[j].sx.a.x);
            return c.is_zero();
        };
        const double pi = 3.14159265358979323846;
        const double tol = 1e-7;
        // near-equal angles after sorting
        for (size_t i = 0; i < dirs.size(); ++i) {
            for (size_t j = i + 1; j < dirs.size() && dirs[j].angle - dirs[i].angle <= tol; ++j)
                if (exactly_parallel(dirs[i].idx, dirs[j].idx)) ++report.coincident_direction_pairs;
        }
        // wrap-around: angles near 0 against angles near pi
        for (size_t i = 0; i < dirs.size() && dirs[i].angle <= tol; ++i) {
            for (size_t j = dirs.size(); j-- > 0 && dirs[j].angle >= pi - tol;) {
                if (dirs[j].angle - dirs[i].angle <= tol) break; // same cluster, already counted
                if (exactly_parallel(dirs[i].idx, dirs[j].idx)) ++report.coincident_direction_pairs;
            }
        }
    }

    report.pass = report.triple_points == 0 && report.improper_crossings == 0 &&
                  report.coincident_direction_pairs == 0 && report.infinite_intersection_pairs == 0;
    return report;
}

void write_svg(const Representation& rep, const std::string& path) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const auto& set : rep.sets)
        for (const auto& pl : set)
            for (const auto& p : pl.pts) {
                minx = std::min(minx, p.x.to_double());
                maxx = std::max(maxx, p.x.to_double());
                miny = std::min(miny, p.y.to_double());
                maxy = std::max(maxy, p.y.to_double());
            }
    if (minx > maxx) {
        minx = miny = 0;
        maxx = maxy = 1;
    }
    const double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    const double scale = 640.0 / std::max(w, h);

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open svg output: " + path);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='720' height='720' viewBox='0 0 720 720'>\n";
    auto X = [&](const BigRat& x) { return 40 + (x.to_double() - minx) * scale; };
    auto Y = [&](const BigRat& y) { return 680 - (y.to_double() - miny) * scale; };

    if (rep.disk) {
        os << "<circle cx='" << X(rep.disk->center.x) << "' cy='" << Y(rep.disk->center.y)
           << "' r='" << rep.disk->radius.to_double() * scale
           << "' fill='none' stroke='#999' stroke-dasharray='4 3'/>\n";
    }
    for (int v = 0; v < rep.n; ++v) {
        const char* color = palette[static_cast<size_t>(v) % 10];
        for (const auto& pl : rep.sets[static_cast<size_t>(v)]) {
            os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
            for (const auto& p : pl.pts) os << X(p.x) << "," << Y(p.y) << " ";
            if (pl.closed) os << X(pl.pts[0].x) << "," << Y(pl.pts[0].y);
            os << "'/>\n";
        }
    }
    // mark pairwise intersection points
    auto segs = explode(rep);
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].set == segs[j].set || !boxes_meet(segs[i].sx, segs[j].sx)) continue;
            auto m = segment_meet_fast(segs[i].sx, segs[j].sx);
            if (m.kind == geom::SegMeet::cross || m.kind == geom::SegMeet::touch)
                os << "<circle cx='" << X(m.at.x) << "' cy='" << Y(m.at.y)
                   << "' r='2.5' fill='#000'/>\n";
        }
    os << "</svg>\n";
}

} // namespace graphlim
