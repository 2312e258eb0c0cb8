#pragma once

#include <optional>
#include <vector>

#include "segcells/rational.hpp"

namespace segcells {

struct Point {
    Scalar x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, used for canonical orderings and map keys
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

struct Segment {
    int id = -1;
    Point p, q;
    Scalar weight = 1;
};

// Open polylines are vertex chains; closed ones get an implicit last->first edge.
struct Polyline {
    std::vector<Point> vertices;
    bool closed = false;
};

// Sign of the signed area of triangle (p, q, r): +1 if r lies left of p->q
// (counterclockwise turn), -1 if right, 0 if collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    return sign(cross(q - p, r - p));
}

// Whether x lies on the closed segment [p, q].
bool on_segment(const Point& x, const Point& p, const Point& q);

inline bool on_segment(const Point& x, const Segment& s) { return on_segment(x, s.p, s.q); }

// Intersection point of two closed segments, empty if disjoint.  Throws
// Overlap if the segments are collinear and share more than one point.
std::optional<Point> seg_intersect(const Segment& s, const Segment& t);

// Oriented crossing number of a polyline with the closed segment a->b:
// +1 per left-to-right crossing, -1 per right-to-left.  A polyline vertex
// exactly on line(a, b) counts as lying infinitesimally to the left, which
// resolves every vertex-on-line incidence consistently.  Requires a != b and
// neither a nor b on the polyline (Degenerate otherwise).
long crossing_number(const Polyline& gamma, const Point& a, const Point& b);

// True if no two non-adjacent edges intersect and adjacent edges share only
// their common vertex.  Zero-length edges are ignored.
bool polyline_is_simple(const Polyline& gamma);

enum class PointSide { Inside, Outside };

// Even-odd classification of p against a closed simple polyline.
// Throws Degenerate if p lies on the polyline.
PointSide point_in_closed_polyline(const Point& p, const Polyline& gamma);

// The edges of a polyline with zero-length edges dropped, as (u, v) index
// pairs into gamma.vertices (including the closing edge when closed).
std::vector<std::pair<int, int>> effective_edges(const Polyline& gamma);

}  // namespace segcells
