#pragma once

#include <vector>

#include "segcells/geom.hpp"

namespace segcells {

// Graph with one node per segment and an edge for every intersecting pair,
// weighted by the sum of the two segment weights.
struct IntersectionGraph {
    struct Edge {
        int s, t;       // segment ids, s < t
        Point x;        // the (unique) common point
        Scalar weight;  // w(s) + w(t)
    };

    int n = 0;
    std::vector<Segment> segments;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;  // edge indices, sorted

    int other(int e, int v) const { return edges[e].s == v ? edges[e].t : edges[e].s; }
};

IntersectionGraph build_intersection_graph(const std::vector<Segment>& segments);

}  // namespace segcells
