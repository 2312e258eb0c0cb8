#pragma once

#include <optional>
#include <vector>

#include "segcells/geom.hpp"

namespace segcells {

// Outer ring counterclockwise, holes clockwise.
struct PolygonWithHoles {
    std::vector<Point> outer;
    std::vector<std::vector<Point>> holes;
};

void validate_polygon(const PolygonWithHoles& poly);

enum class Region { Interior, Boundary, Exterior };
Region classify_point(const PolygonWithHoles& poly, const Point& p);

// Boundary ring containing p: 0 for the outer ring, i+1 for hole i.
std::optional<int> boundary_index(const PolygonWithHoles& poly, const Point& p);

// The polygon boundary as weight-0 segments with ids first_id, first_id+1, ...
std::vector<Segment> boundary_segments(const PolygonWithHoles& poly, int first_id);

// Checks that segments lie inside the closed region with endpoints on the
// boundary and that a, b are interior points.
void validate_restricted(const PolygonWithHoles& poly, const std::vector<Segment>& segments,
                         const Point& a, const Point& b);

// Planar subdivision induced by the segments (and, when clipped, the clip
// polygon boundary appended as extra colored segments).
struct Arrangement {
    struct HalfEdge {
        int origin;  // vertex id
        int twin;
        int next;
        int face = -1;
        int color;  // index of the supporting segment
    };
    struct Face {
        bool unbounded = false;
        bool exterior = false;       // outside the clip region; meaningful when clipped
        std::vector<int> cycles;     // one representative half-edge per boundary cycle
    };

    std::vector<Point> vertices;
    std::vector<HalfEdge> half;  // twins adjacent: 2k and 2k+1
    std::vector<Face> faces;
    std::vector<Segment> segments;  // as built, including clip boundary
    int real_segment_count = 0;     // colors >= this belong to the clip boundary
    int unbounded_face = -1;
    int components = 0;
    bool clipped = false;

    // vertex ids along each segment, sorted from .p to .q
    std::vector<std::vector<int>> points_on_segment;

    int num_vertices() const { return (int)vertices.size(); }
    int num_edges() const { return (int)half.size() / 2; }
    int target(int h) const { return half[half[h].twin].origin; }
    int edge_color(int e) const { return half[2 * e].color; }
    std::pair<int, int> edge_ends(int e) const { return {half[2 * e].origin, target(2 * e)}; }
    Point edge_midpoint(int e) const;
    bool face_interior(int f) const { return !faces[f].exterior; }
};

Arrangement build_arrangement(const std::vector<Segment>& segments,
                              const PolygonWithHoles* clip = nullptr);

// Face containing p.  Degenerate if p lies on an edge or vertex.
int locate(const Arrangement& arr, const Point& p);

int face_count(const Arrangement& arr);

struct DualEdge {
    int f1, f2;    // faces on the two sides (equal for pendant edges)
    int color;
    int edge;      // arrangement edge index
};

struct DualGraph {
    int num_faces = 0;
    std::vector<DualEdge> edges;
};

DualGraph dual(const Arrangement& arr);

// Whether a and b lie in the same face of the arrangement of `segments`
// (restricted to the clip region when given).  Degenerate if a or b lies on a
// segment; Precondition if a clip is given and a or b is not interior.
bool same_cell(const std::vector<Segment>& segments, const Point& a, const Point& b,
               const PolygonWithHoles* clip = nullptr);

}  // namespace segcells
