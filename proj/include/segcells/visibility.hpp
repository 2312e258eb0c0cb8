#pragma once

#include <utility>
#include <vector>

#include "segcells/arrangement.hpp"

namespace segcells {

// Length of a polygonal path kept exactly as a sum of square roots of
// rationals.  Comparisons are exact: radicands whose ratio is a rational
// square are merged (their roots are commensurable), and the surviving
// groups are separated by integer-square-root interval refinement, which
// terminates because roots of distinct groups never sum to zero.
class PathLength {
public:
    PathLength() = default;
    void add_sqrt(const Scalar& squared);
    PathLength plus_sqrt(const Scalar& squared) const;
    const std::vector<Scalar>& radicands() const { return rad_; }
    double approx() const;

private:
    std::vector<Scalar> rad_;  // sorted, strictly positive
};

// Sign of sum coeff_i * sqrt(radicand_i); radicands must be nonnegative.
int sqrt_sum_sign(const std::vector<std::pair<Scalar, Scalar>>& terms);

int compare_lengths(const PathLength& a, const PathLength& b);  // -1, 0, +1
inline bool operator<(const PathLength& a, const PathLength& b) {
    return compare_lengths(a, b) < 0;
}
inline bool operator==(const PathLength& a, const PathLength& b) {
    return compare_lengths(a, b) == 0;
}

// Where paths may run: the closed polygon-with-holes region, or (outside =
// true) the closed complement of the outer ring, holes ignored.
struct VisibilityDomain {
    PolygonWithHoles poly;
    bool outside = false;
};

// Whether the whole segment p-q stays in the domain; running along the
// boundary is allowed.
bool segment_passable(const VisibilityDomain& dom, const Point& p, const Point& q);

struct Geodesic {
    std::vector<Point> points;  // from -> to
    PathLength length;
};

// Shortest polyline from -> to through the domain, bending only at polygon
// vertices and the given extra anchors.  Deterministic under ties.
Geodesic shortest_path(const VisibilityDomain& dom, const Point& from, const Point& to,
                       const std::vector<Point>& extra = {});

}  // namespace segcells
