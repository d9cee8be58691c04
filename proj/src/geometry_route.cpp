#include "geometry_internal.hpp"

#include <algorithm>

namespace graphlim {
namespace geomdetail {

std::vector<SegX> explode_set(const std::vector<Polyline>& pls) {
    std::vector<SegX> out;
    for (const auto& pl : pls) {
        for (size_t s = 0; s < pl.segment_count(); ++s) {
            SegX seg;
            seg.a = pl.pts[s];
            seg.b = pl.pts[(s + 1) % pl.pts.size()];
            seg.box();
            out.push_back(std::move(seg));
        }
    }
    return out;
}

std::vector<Point> route_through(const std::vector<SegX>& segs, const Point& from, const Point& to) {
    const size_t m = segs.size();
    std::vector<char> has_from(m, 0), has_to(m, 0);
    for (size_t i = 0; i < m; ++i) {
        has_from[i] = geom::point_on_segment(from, segs[i].a, segs[i].b);
        has_to[i] = geom::point_on_segment(to, segs[i].a, segs[i].b);
        if (has_from[i] && has_to[i]) return {from, to};
    }

    // BFS over the segment-adjacency graph from all from-segments
    std::vector<int> prev(m, -2);
    std::vector<size_t> queue;
    for (size_t i = 0; i < m; ++i)
        if (has_from[i]) {
            prev[i] = -1;
            queue.push_back(i);
        }
    int goal = -1;
    for (size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
        size_t u = queue[qi];
        for (size_t w = 0; w < m; ++w) {
            if (prev[w] != -2 || !boxes_meet(segs[u], segs[w])) continue;
            if (geom::segment_meet(segs[u].a, segs[u].b, segs[w].a, segs[w].b).kind ==
                geom::SegMeet::none)
                continue;
            prev[w] = static_cast<int>(u);
            if (has_to[w]) {
                goal = static_cast<int>(w);
                break;
            }
            queue.push_back(w);
        }
    }
    if (goal == -1) return {};

    std::vector<size_t> chain;
    for (int x = goal; x != -1; x = prev[static_cast<size_t>(x)]) chain.push_back(static_cast<size_t>(x));
    std::reverse(chain.begin(), chain.end());

    std::vector<Point> pts{from};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        auto mpt = geom::segment_meet(segs[chain[i]].a, segs[chain[i]].b, segs[chain[i + 1]].a,
                                      segs[chain[i + 1]].b);
        pts.push_back(mpt.at);
    }
    pts.push_back(to);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

BigRat set_dist2(const std::vector<SegX>& A, const std::vector<SegX>& B) {
    bool first = true;
    BigRat best(0);
    for (const auto& s : A)
        for (const auto& t : B) {
            BigRat d = geom::dist2_segments(s.a, s.b, t.a, t.b);
            if (first || d < best) {
                best = d;
                first = false;
            }
            if (best.is_zero()) return best;
        }
    return best;
}

std::optional<Point> set_witness(const std::vector<SegX>& A, const std::vector<SegX>& B) {
    for (const auto& s : A)
        for (const auto& t : B) {
            if (!boxes_meet(s, t)) continue;
            auto m = geom::segment_meet(s.a, s.b, t.a, t.b);
            if (m.kind != geom::SegMeet::none) return m.at;
        }
    return std::nullopt;
}

namespace {
// -1 miss, 1 certified proper cross, 0 uncertain
int classify_filtered(const SegX& s, const SegX& t) {
    const double mag = std::max(s.mag, t.mag);
    const int o1 = orient_filtered(s.axd, s.ayd, s.bxd, s.byd, t.axd, t.ayd, mag);
    const int o2 = orient_filtered(s.axd, s.ayd, s.bxd, s.byd, t.bxd, t.byd, mag);
    if (o1 * o2 == 1) return -1;
    const int o3 = orient_filtered(t.axd, t.ayd, t.bxd, t.byd, s.axd, s.ayd, mag);
    const int o4 = orient_filtered(t.axd, t.ayd, t.bxd, t.byd, s.bxd, s.byd, mag);
    if (o3 * o4 == 1) return -1;
    if (o1 * o2 == -1 && o3 * o4 == -1) return 1;
    return 0;
}
} // namespace

Point meet_point_exact(const SegX& s, const SegX& t) {
    const BigRat dx1 = s.b.x - s.a.x, dy1 = s.b.y - s.a.y;
    const BigRat dx2 = t.b.x - t.a.x, dy2 = t.b.y - t.a.y;
    const BigRat denom = dx1 * dy2 - dy1 * dx2;
    const BigRat ex = t.a.x - s.a.x, ey = t.a.y - s.a.y;
    const BigRat tt = (ex * dy2 - ey * dx2) / denom;
    return Point{s.a.x + tt * dx1, s.a.y + tt * dy1};
}

geom::SegMeet segment_meet_fast(const SegX& s, const SegX& t) {
    const int cls = classify_filtered(s, t);
    if (cls < 0) return {};
    if (cls > 0) {
        geom::SegMeet m;
        m.kind = geom::SegMeet::cross;
        m.at = meet_point_exact(s, t);
        return m;
    }
    return geom::segment_meet(s.a, s.b, t.a, t.b);
}

geom::SegMeet::Kind meet_kind_fast(const SegX& s, const SegX& t) {
    const int cls = classify_filtered(s, t);
    if (cls < 0) return geom::SegMeet::none;
    if (cls > 0) return geom::SegMeet::cross;
    return geom::segment_meet(s.a, s.b, t.a, t.b).kind;
}

MeetApprox segment_meet_approx(const SegX& s, const SegX& t) {
    MeetApprox out;
    const int cls = classify_filtered(s, t);
    if (cls < 0) return out;
    if (cls > 0) {
        out.kind = geom::SegMeet::cross;
        const double mag = std::max(s.mag, t.mag);
        const double dx1 = s.bxd - s.axd, dy1 = s.byd - s.ayd;
        const double dx2 = t.bxd - t.axd, dy2 = t.byd - t.ayd;
        const double denom = dx1 * dy2 - dy1 * dx2;
        const double den_err = mag * mag * 0x1.0p-45;
        if (std::fabs(denom) > 64 * den_err) {
            const double tt = ((t.axd - s.axd) * dy2 - (t.ayd - s.ayd) * dx2) / denom;
            out.ax = s.axd + tt * dx1;
            out.ay = s.ayd + tt * dy1;
            // shallow crossings amplify the error through 1/denom; bound it
            // at runtime from the certified denominator
            const double err_tt = (mag * mag * 0x1.0p-44) * (1.0 + std::fabs(tt)) /
                                  (std::fabs(denom) - den_err);
            out.approx_err = err_tt * 2.0 * mag + mag * 0x1.0p-48;
            return out;
        }
        out.has_exact = true;
        out.at = meet_point_exact(s, t);
        out.ax = out.at.x.to_double();
        out.ay = out.at.y.to_double();
        out.approx_err = mag * 0x1.0p-40;
        return out;
    }
    auto exact = geom::segment_meet(s.a, s.b, t.a, t.b);
    out.kind = exact.kind;
    if (exact.kind != geom::SegMeet::none) {
        out.has_exact = true;
        out.at = exact.at;
        out.ax = exact.at.x.to_double();
        out.ay = exact.at.y.to_double();
        out.approx_err = std::max(s.mag, t.mag) * 0x1.0p-40;
    }
    return out;
}

BigRat sqrt_lower(const BigRat& sq) { return sq.sqrt_lower(16); }

BigRat snap_down(const BigRat& v, const BigRat& grid) {
    BigRat q = v / grid;
    BigInt whole = q.num().divmod(q.den()).first;
    // floor for negatives
    if (q.sign() < 0 && !(BigRat(whole, BigInt(1)) == q)) whole = whole - BigInt(1);
    return BigRat(whole, BigInt(1)) * grid;
}

BigRat pow2_below(const BigRat& v) {
    if (v.sign() <= 0) throw std::domain_error("pow2_below needs a positive value");
    long e = static_cast<long>(v.num().bit_length()) - static_cast<long>(v.den().bit_length());
    auto pw = [](long exp) {
        return exp >= 0 ? BigRat(BigInt(1) << static_cast<unsigned>(exp), BigInt(1))
                        : BigRat(BigInt(1), BigInt(1) << static_cast<unsigned>(-exp));
    };
    BigRat cand = pw(e);
    if (cand > v) cand = pw(e - 1);
    return cand;
}

} // namespace geomdetail
} // namespace graphlim
