#ifndef GRAPHLIM_GEOMETRY_HPP
#define GRAPHLIM_GEOMETRY_HPP

#include "graphlim/bigint.hpp"
#include "graphlim/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace graphlim {

/// Exact rational point; no floating coordinate ever enters a predicate.
struct Point {
    BigRat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Piecewise-linear curve.  Closed polylines have an implicit edge from the
/// last point back to the first.
struct Polyline {
    std::vector<Point> pts;
    bool closed = false;

    void validate() const;
    size_t segment_count() const { return closed ? pts.size() : pts.size() - 1; }
};

struct Disk {
    Point center;
    BigRat radius; // rational radius; boundary tests use radius^2 exactly
};

/// Intersection representation: one polygonal set (union of polylines) per
/// graph vertex.  Each set must be nonempty and connected in the
/// segment-adjacency sense.
struct Representation {
    int n = 0;
    std::vector<std::vector<Polyline>> sets;
    std::optional<Disk> disk;

    void validate() const;
};

/// Audit of the general-position requirements: finite pairwise
/// intersections, no point on three sets, all crossings proper, all
/// segment directions pairwise distinct.
struct PositionReport {
    long long intersection_points = 0;       // informational
    long long triple_points = 0;             // violations
    long long improper_crossings = 0;
    long long coincident_direction_pairs = 0;
    long long infinite_intersection_pairs = 0; // collinear overlaps between sets
    bool pass = false;
};

/// Edge iff the two vertex sets share at least one point (touching counts).
Graph intersection_graph(const Representation& rep);

PositionReport check_general_position(const Representation& rep);

/// Thrown when the seeded perturbation retries are exhausted; the pipeline
/// never degrades silently.
struct NormalizeFailure : std::runtime_error {
    explicit NormalizeFailure(const std::string& m) : std::runtime_error(m) {}
};

/// Normalization pipeline: connecting subcurves through each set, seeded
/// rational perturbation, trapezoid thickening, non-crossing Eulerian
/// merge, and cutting each closed curve open at a private point.  Output
/// contract: one simple open polyline per vertex, the same intersection
/// graph as the input, and a passing position report.
Representation normalize(const Representation& rep, uint64_t seed);

/// Same contract as normalize, plus: every output curve has both endpoints
/// exactly on the boundary circle of a slightly enlarged disk (stored in
/// the output) and otherwise lies strictly inside it.  Requires rep.disk;
/// every input set must meet the disk boundary and lie inside the disk.
Representation normalize_outer(const Representation& rep, uint64_t seed);

/// Boundary-anchored representation of g from a clique covering with an
/// outerplanar quotient: one boundary point per nonempty part, offset
/// connector curves per cross-part edge split at interior points.
/// Output intersection graph equals g exactly.
Representation build_outerstring_from_cover(const Graph& g, const VertexPartition& cover,
                                            const Disk& disk);

/// Crossing report for the K_5 drawing extracted from a representation
/// indexed like G_5 (five singleton sets then ten pair sets in canonical
/// order).  e_ij runs through A_i, A_ij, A_j between selected points; the
/// report counts proper crossings between curves of disjoint index pairs.
struct K5CrossingReport {
    struct PairEntry {
        std::array<int, 2> edge1;  // {i,j}, 1-based
        std::array<int, 2> edge2;
        long long crossings;
        int parity;
    };
    std::vector<PairEntry> crossing_pairs;      // pairs with >= 1 crossing
    long long independent_crossing_pairs = 0;
};

K5CrossingReport derive_k5_drawing(const Representation& rep);

/// Human-oriented SVG rendering (colors per vertex, dots at intersection
/// points); no exactness contract.
void write_svg(const Representation& rep, const std::string& path);

// -- exact predicate toolkit (exposed for tests) -------------------------

namespace geom {

int orient(const Point& a, const Point& b, const Point& c);
bool point_on_segment(const Point& p, const Point& a, const Point& b);

struct SegMeet {
    enum Kind { none, touch, cross, overlap } kind = none;
    Point at; // a representative meeting point (overlap midpoint for overlaps)
};

/// Full classification of the meeting of segments [a,b] and [c,d]:
/// `cross` is a proper transversal interior-interior crossing, `touch`
/// any other single-point meeting, `overlap` a shared collinear piece.
SegMeet segment_meet(const Point& a, const Point& b, const Point& c, const Point& d);

BigRat dist2_point_segment(const Point& p, const Point& a, const Point& b);
BigRat dist2_segments(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace geom

} // namespace graphlim

#endif
