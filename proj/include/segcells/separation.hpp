#pragma once

#include <optional>

#include "segcells/arrangement.hpp"
#include "segcells/intersection_graph.hpp"

namespace segcells {

// Shortest-path tree in the intersection graph rooted at a segment, with the
// curve realizing each tree path annotated by its oriented crossing count
// against a probe segment.  Parents are chosen deterministically (smallest
// id among optimal predecessors already settled), so results do not depend
// on traversal order.
struct SpTree {
    int root = -1;
    std::vector<char> reached;
    std::vector<Scalar> dist;
    std::vector<int> parent;       // -1 for the root and unreached nodes
    std::vector<int> parent_edge;  // graph edge to the parent
    std::vector<int> first_hop;    // first segment after the root on the path
    std::vector<int> depth;
    std::vector<int> order;        // settle order, root first

    // set by annotate_tree
    std::vector<Point> entry;      // where the path curve enters the segment
    std::vector<long> cross;       // oriented crossings of the path curve
};

SpTree sp_tree(const IntersectionGraph& g, int root);

// Distance computations, exposed separately so they can be cross-checked:
// the bucket variant requires every edge weight to be 0, 1 or 2.
std::vector<Scalar> sp_distances_heap(const IntersectionGraph& g, int root);
std::vector<Scalar> sp_distances_bucket(const IntersectionGraph& g, int root);

void annotate_tree(SpTree& t, const IntersectionGraph& g, const Point& a, const Point& b);

// Closed walk associated with a root and a graph edge (u, v): tree path to u,
// the u-v crossing, tree path back from v, closed along the root segment.
// Returns the oriented crossing count of the realized curve with the probe.
// The _direct variant rebuilds the whole polyline and exists as an audit of
// the incremental formula.
long walk_crossing(const SpTree& t, const IntersectionGraph& g, int edge, const Point& a,
                   const Point& b);
long walk_crossing_direct(const SpTree& t, const IntersectionGraph& g, int edge, const Point& a,
                          const Point& b);

struct Candidate {
    Scalar length;  // cycle length in graph weights = twice the subset weight
    int root = -1;
    int s = -1, t = -1;  // the non-tree edge, s < t
};

bool candidate_less(const Candidate& a, const Candidate& b);

// Best odd-crossing fundamental cycle for one root, with the doubled prefix
// to the lowest common ancestor removed from the length.
std::optional<Candidate> best_candidate_for_root(const IntersectionGraph& g, int root,
                                                 const Point& a, const Point& b);

// Vertices of the cycle behind a candidate: path u..lca, path v..lca.
std::vector<int> candidate_cycle(const SpTree& t, int u, int v);

struct SeparationResult {
    Scalar weight;
    std::vector<int> chosen;  // segment ids, sorted ascending
    Candidate witness;
};

// Minimum-weight subset of segments whose arrangement keeps a and b in
// different cells.  SameCell if no subset can (a and b share the full
// arrangement's cell); Degenerate if a or b lies on a segment.
SeparationResult solve_separation(const std::vector<Segment>& segments, const Point& a,
                                  const Point& b, int threads = 1);

// Same problem inside a polygon with holes: the boundary acts as free
// (weight-0) separating geometry, segments must span the region.
SeparationResult solve_separation_in_polygon(const PolygonWithHoles& poly,
                                             const std::vector<Segment>& segments, const Point& a,
                                             const Point& b, int threads = 1);

}  // namespace segcells
