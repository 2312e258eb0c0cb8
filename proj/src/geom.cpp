#include "segcells/geom.hpp"

namespace segcells {

bool on_segment(const Point& x, const Point& p, const Point& q) {
    if (orient(p, q, x) != 0) return false;
    return dot(x - p, q - p) >= 0 && dot(x - q, p - q) >= 0;
}

std::optional<Point> seg_intersect(const Segment& s, const Segment& t) {
    const Point r = s.q - s.p;
    const Point d = t.q - t.p;
    const Scalar denom = cross(r, d);

    if (denom == 0) {
        // Parallel.  Collinear segments may share one endpoint; sharing more
        // is an overlap, which the arrangement model rejects.
        if (orient(s.p, s.q, t.p) != 0) return std::nullopt;
        std::optional<Point> found;
        for (const Point* c : {&t.p, &t.q}) {
            if (!on_segment(*c, s)) continue;
            if (found && *found != *c) fail(ErrorCode::Overlap, "collinear segments overlap");
            found = *c;
        }
        for (const Point* c : {&s.p, &s.q}) {
            if (!on_segment(*c, t)) continue;
            if (found && *found != *c) fail(ErrorCode::Overlap, "collinear segments overlap");
            found = *c;
        }
        return found;
    }

    const Scalar tn = cross(t.p - s.p, d);
    const Scalar un = cross(t.p - s.p, r);
    // Parameters of the line intersection along each segment.
    const Scalar a = tn / denom;
    const Scalar b = un / denom;
    if (a < 0 || a > 1 || b < 0 || b > 1) return std::nullopt;
    return Point{s.p.x + a * r.x, s.p.y + a * r.y};
}

std::vector<std::pair<int, int>> effective_edges(const Polyline& gamma) {
    std::vector<std::pair<int, int>> edges;
    const int m = (int)gamma.vertices.size();
    for (int i = 0; i + 1 < m; ++i)
        if (gamma.vertices[i] != gamma.vertices[i + 1]) edges.emplace_back(i, i + 1);
    if (gamma.closed && m >= 2 && gamma.vertices[m - 1] != gamma.vertices[0])
        edges.emplace_back(m - 1, 0);
    return edges;
}

long crossing_number(const Polyline& gamma, const Point& a, const Point& b) {
    require(a != b, ErrorCode::Degenerate, "crossing_number needs two distinct reference points");

    long total = 0;
    for (auto [ui, vi] : effective_edges(gamma)) {
        const Point& u = gamma.vertices[ui];
        const Point& v = gamma.vertices[vi];
        if (on_segment(a, u, v) || on_segment(b, u, v))
            fail(ErrorCode::Degenerate, "reference point lies on the polyline");

        // Vertices exactly on line(a,b) count as left of a->b.
        const bool u_left = orient(a, b, u) >= 0;
        const bool v_left = orient(a, b, v) >= 0;
        if (u_left == v_left) continue;

        // The edge crosses line(a,b); find the intersection and keep it only
        // if it falls strictly between a and b.  It cannot equal a or b: that
        // would put a reference point on the edge, rejected above.
        const Point r = v - u;
        const Point d = b - a;
        const Scalar t = cross(a - u, d) / cross(r, d);
        const Point x{u.x + t * r.x, u.y + t * r.y};
        if (dot(x - a, b - a) > 0 && dot(x - b, a - b) > 0) total += u_left ? 1 : -1;
    }
    return total;
}

bool polyline_is_simple(const Polyline& gamma) {
    const auto edges = effective_edges(gamma);
    const int m = (int)edges.size();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Point& a = gamma.vertices[edges[i].first];
            const Point& b = gamma.vertices[edges[i].second];
            const Point& c = gamma.vertices[edges[j].first];
            const Point& d = gamma.vertices[edges[j].second];

            // Shared endpoint between consecutive effective edges (with
            // wraparound on closed polylines) is legitimate.
            const Point* shared = nullptr;
            if (b == c) shared = &b;
            if (gamma.closed && j == m - 1 && i == 0 && d == a) shared = &a;

            std::optional<Point> hit;
            try {
                hit = seg_intersect(Segment{0, a, b}, Segment{1, c, d});
            } catch (const Error&) {
                return false;  // collinear overlap
            }
            if (!hit) continue;
            if (!shared || *hit != *shared) return false;
        }
    }
    return true;
}

PointSide point_in_closed_polyline(const Point& p, const Polyline& gamma) {
    require(gamma.closed, ErrorCode::Precondition, "point test needs a closed polyline");
    bool inside = false;
    for (auto [ui, vi] : effective_edges(gamma)) {
        const Point& u = gamma.vertices[ui];
        const Point& v = gamma.vertices[vi];
        if (on_segment(p, u, v)) fail(ErrorCode::Degenerate, "query point lies on the polyline");
        if ((u.y > p.y) != (v.y > p.y)) {
            // x where the edge meets the horizontal through p
            const Scalar xi = u.x + (p.y - u.y) / (v.y - u.y) * (v.x - u.x);
            if (p.x < xi) inside = !inside;
        }
    }
    return inside ? PointSide::Inside : PointSide::Outside;
}

}  // namespace segcells
