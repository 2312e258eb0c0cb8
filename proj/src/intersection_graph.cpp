#include "segcells/intersection_graph.hpp"

#include "segcells/errors.hpp"

namespace segcells {

IntersectionGraph build_intersection_graph(const std::vector<Segment>& segments) {
    IntersectionGraph g;
    g.n = (int)segments.size();
    g.segments = segments;
    g.adj.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        require(segments[i].id == i, ErrorCode::Precondition, "segment ids must be 0..n-1 in order");
        require(segments[i].p != segments[i].q, ErrorCode::Degenerate, "zero-length segment");
        require(segments[i].weight >= 0, ErrorCode::Params, "segment weights must be nonnegative");
    }
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (auto x = seg_intersect(segments[i], segments[j])) {
                const int e = (int)g.edges.size();
                g.edges.push_back({i, j, *x, segments[i].weight + segments[j].weight});
                g.adj[i].push_back(e);
                g.adj[j].push_back(e);
            }
    return g;
}

}  // namespace segcells
