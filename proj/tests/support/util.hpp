#pragma once

#include <algorithm>
#include <vector>

#include "segcells/geom.hpp"
#include "segcells/rng.hpp"

namespace segcells::testutil {

inline Point ip(long x, long y) { return Point{Scalar(x), Scalar(y)}; }

// Exact counterclockwise-from-positive-x comparison of directions around c.
inline bool angle_less(const Point& c, const Point& u, const Point& v) {
    const Point du = u - c;
    const Point dv = v - c;
    auto half = [](const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    if (half(du) != half(dv)) return half(du) < half(dv);
    return cross(du, dv) > 0;
}

// Simple closed polyline through random integer points sorted by angle
// around their first point; star-shaped, hence free of self-crossings.
inline Polyline random_star_polyline(Rng& rng, int verts, long box) {
    while (true) {
        const Point c = ip(rng.uniform(-box, box), rng.uniform(-box, box));
        std::vector<Point> pts;
        for (int i = 0; i < verts * 3 && (int)pts.size() < verts; ++i) {
            Point p = ip(rng.uniform(-box, box), rng.uniform(-box, box));
            if (p == c) continue;
            bool dup = false;
            for (const Point& q : pts)
                if (cross(p - c, q - c) == 0 && dot(p - c, q - c) > 0) dup = true;  // same ray
            if (!dup) pts.push_back(p);
        }
        if ((int)pts.size() < 3) continue;
        std::sort(pts.begin(), pts.end(),
                  [&](const Point& u, const Point& v) { return angle_less(c, u, v); });
        Polyline gamma{pts, true};
        if (polyline_is_simple(gamma)) return gamma;
    }
}

inline bool point_on_polyline(const Point& p, const Polyline& gamma) {
    for (auto [u, v] : effective_edges(gamma))
        if (on_segment(p, gamma.vertices[u], gamma.vertices[v])) return true;
    return false;
}

}  // namespace segcells::testutil
