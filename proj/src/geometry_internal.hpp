#ifndef GRAPHLIM_GEOMETRY_INTERNAL_HPP
#define GRAPHLIM_GEOMETRY_INTERNAL_HPP

#include "graphlim/geometry.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace graphlim {
namespace geomdetail {

struct SegX {
    Point a, b;
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    // cached double mirrors for the floating-point filter
    double axd = 0, ayd = 0, bxd = 0, byd = 0;
    double mag = 0; // max absolute coordinate, bounds the rounding error

    void box() {
        axd = a.x.to_double();
        ayd = a.y.to_double();
        bxd = b.x.to_double();
        byd = b.y.to_double();
        mag = std::max(std::max(std::fabs(axd), std::fabs(ayd)),
                       std::max(std::fabs(bxd), std::fabs(byd)));
        const double pad = 1e-9 + 1e-9 * mag;
        x0 = std::min(axd, bxd) - pad;
        x1 = std::max(axd, bxd) + pad;
        y0 = std::min(ayd, byd) - pad;
        y1 = std::max(ayd, byd) + pad;
    }
};

inline bool boxes_meet(const SegX& s, const SegX& t) {
    return s.x0 <= t.x1 && t.x0 <= s.x1 && s.y0 <= t.y1 && t.y0 <= s.y1;
}

/// Certified sign of the orientation determinant from cached doubles:
/// +1/-1 when the floating computation provably has the right sign,
/// -2 when uncertain.  Cached coordinates carry relative error at most
/// 2^-50, so |det| > M^2 * 2^-44 certifies the sign.
inline int orient_filtered(double ax, double ay, double bx, double by, double cx, double cy,
                           double mag) {
    const double det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    const double bound = mag * mag * 0x1.0p-44;
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return -2;
}

/// segment_meet with a floating-point fast path: clear misses and clear
/// proper crossings avoid exact arithmetic entirely (the crossing point
/// itself is still computed exactly); everything uncertain falls back to
/// the exact classifier.
geom::SegMeet segment_meet_fast(const SegX& s, const SegX& t);

/// Classification plus an approximate meeting point; the exact point is
/// only computed on the uncertain fallback path.  `approx_err` bounds the
/// absolute error of (ax, ay) whenever kind != none.
struct MeetApprox {
    geom::SegMeet::Kind kind = geom::SegMeet::none;
    double ax = 0, ay = 0;
    double approx_err = 0;
    bool has_exact = false;
    Point at;
};
MeetApprox segment_meet_approx(const SegX& s, const SegX& t);

/// Kind only; never touches exact arithmetic on certified misses or
/// certified proper crossings.
geom::SegMeet::Kind meet_kind_fast(const SegX& s, const SegX& t);

/// Exact meeting point of a pair already known to meet.
Point meet_point_exact(const SegX& s, const SegX& t);

inline Point add(const Point& p, const BigRat& dx, const BigRat& dy) {
    return Point{p.x + dx, p.y + dy};
}

inline BigRat dist2(const Point& p, const Point& q) {
    const BigRat dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// Per-set segment soup (input pieces plus appended stubs).
std::vector<SegX> explode_set(const std::vector<Polyline>& pls);

/// Polyline route between two points of a connected segment soup, following
/// pairwise segment meeting points (BFS, fewest hops).  Consecutive
/// duplicates removed.  Empty when unreachable.
std::vector<Point> route_through(const std::vector<SegX>& segs, const Point& from, const Point& to);

/// min over segment pairs of exact squared distance between two soups.
BigRat set_dist2(const std::vector<SegX>& A, const std::vector<SegX>& B);

/// First meeting point of two soups in deterministic order, if any.
std::optional<Point> set_witness(const std::vector<SegX>& A, const std::vector<SegX>& B);

/// Largest r = m/2^k with r <= sqrt(sq); 32-bit precision.
BigRat sqrt_lower(const BigRat& sq);

/// Grid-round each coordinate of v down to a multiple of grid (keeps
/// denominators small through the construction stages).
BigRat snap_down(const BigRat& v, const BigRat& grid);

/// Largest power of two (with integer exponent) not exceeding v > 0.
/// Pure-dyadic grids keep constructed coordinates gcd-friendly.
BigRat pow2_below(const BigRat& v);

} // namespace geomdetail
} // namespace graphlim

#endif
