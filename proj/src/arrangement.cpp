#include "segcells/arrangement.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace segcells {

namespace {

Polyline ring_polyline(const std::vector<Point>& ring) { return Polyline{ring, true}; }

Scalar ring_area2(const std::vector<Point>& ring) {
    Scalar s = 0;
    for (size_t i = 0; i < ring.size(); ++i) s += cross(ring[i], ring[(i + 1) % ring.size()]);
    return s;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void validate_polygon(const PolygonWithHoles& poly) {
    auto check_ring = [](const std::vector<Point>& ring, const std::string& what) {
        require(ring.size() >= 3, ErrorCode::BadPolygon, what + " ring needs at least 3 vertices");
        for (size_t i = 0; i < ring.size(); ++i)
            require(ring[i] != ring[(i + 1) % ring.size()], ErrorCode::BadPolygon,
                    what + " ring repeats a vertex");
        require(polyline_is_simple(ring_polyline(ring)), ErrorCode::BadPolygon,
                what + " ring is not simple");
    };
    check_ring(poly.outer, "outer");
    require(ring_area2(poly.outer) > 0, ErrorCode::BadPolygon,
            "outer ring must be counterclockwise");
    for (auto& h : poly.holes) {
        check_ring(h, "hole");
        require(ring_area2(h) < 0, ErrorCode::BadPolygon, "hole rings must be clockwise");
    }

    std::vector<const std::vector<Point>*> rings{&poly.outer};
    for (auto& h : poly.holes) rings.push_back(&h);
    for (size_t i = 0; i < rings.size(); ++i)
        for (size_t j = i + 1; j < rings.size(); ++j)
            for (size_t ei = 0; ei < rings[i]->size(); ++ei)
                for (size_t ej = 0; ej < rings[j]->size(); ++ej) {
                    Segment a{0, (*rings[i])[ei], (*rings[i])[(ei + 1) % rings[i]->size()]};
                    Segment b{1, (*rings[j])[ej], (*rings[j])[(ej + 1) % rings[j]->size()]};
                    bool hit = true;
                    try {
                        hit = seg_intersect(a, b).has_value();
                    } catch (const Error&) {
                    }
                    require(!hit, ErrorCode::BadPolygon, "polygon rings touch or cross");
                }
    for (size_t i = 0; i < poly.holes.size(); ++i) {
        require(point_in_closed_polyline(poly.holes[i][0], ring_polyline(poly.outer)) ==
                    PointSide::Inside,
                ErrorCode::BadPolygon, "hole lies outside the outer ring");
        for (size_t j = 0; j < poly.holes.size(); ++j)
            if (i != j)
                require(point_in_closed_polyline(poly.holes[i][0],
                                                 ring_polyline(poly.holes[j])) == PointSide::Outside,
                        ErrorCode::BadPolygon, "holes are nested");
    }
}

Region classify_point(const PolygonWithHoles& poly, const Point& p) {
    if (boundary_index(poly, p)) return Region::Boundary;
    if (point_in_closed_polyline(p, ring_polyline(poly.outer)) == PointSide::Outside)
        return Region::Exterior;
    for (auto& h : poly.holes)
        if (point_in_closed_polyline(p, ring_polyline(h)) == PointSide::Inside)
            return Region::Exterior;
    return Region::Interior;
}

std::optional<int> boundary_index(const PolygonWithHoles& poly, const Point& p) {
    auto on_ring = [&](const std::vector<Point>& ring) {
        for (size_t i = 0; i < ring.size(); ++i)
            if (on_segment(p, ring[i], ring[(i + 1) % ring.size()])) return true;
        return false;
    };
    if (on_ring(poly.outer)) return 0;
    for (size_t i = 0; i < poly.holes.size(); ++i)
        if (on_ring(poly.holes[i])) return (int)i + 1;
    return std::nullopt;
}

std::vector<Segment> boundary_segments(const PolygonWithHoles& poly, int first_id) {
    std::vector<Segment> out;
    int id = first_id;
    auto add_ring = [&](const std::vector<Point>& ring) {
        for (size_t i = 0; i < ring.size(); ++i)
            out.push_back(Segment{id++, ring[i], ring[(i + 1) % ring.size()], 0});
    };
    add_ring(poly.outer);
    for (auto& h : poly.holes) add_ring(h);
    return out;
}

void validate_restricted(const PolygonWithHoles& poly, const std::vector<Segment>& segments,
                         const Point& a, const Point& b) {
    validate_polygon(poly);
    const auto bseg = boundary_segments(poly, 0);
    for (const Segment& s : segments) {
        require(s.p != s.q, ErrorCode::Degenerate, "zero-length segment");
        require(classify_point(poly, s.p) == Region::Boundary &&
                    classify_point(poly, s.q) == Region::Boundary,
                ErrorCode::BadPolygon, "segment endpoints must lie on the polygon boundary");
        for (const Segment& e : bseg) {
            std::optional<Point> x;
            try {
                x = seg_intersect(s, e);
            } catch (const Error&) {
                fail(ErrorCode::BadPolygon, "segment runs along the polygon boundary");
            }
            if (x)
                require(*x == s.p || *x == s.q || *x == e.p || *x == e.q, ErrorCode::BadPolygon,
                        "segment crosses the polygon boundary");
        }
        const Point mid{(s.p.x + s.q.x) / 2, (s.p.y + s.q.y) / 2};
        require(classify_point(poly, mid) == Region::Interior, ErrorCode::BadPolygon,
                "segment leaves the polygon region");
    }
    require(a != b, ErrorCode::Precondition, "reference points coincide");
    require(classify_point(poly, a) == Region::Interior, ErrorCode::Precondition,
            "point a must be interior");
    require(classify_point(poly, b) == Region::Interior, ErrorCode::Precondition,
            "point b must be interior");
}

Point Arrangement::edge_midpoint(int e) const {
    auto [u, v] = edge_ends(e);
    return Point{(vertices[u].x + vertices[v].x) / 2, (vertices[u].y + vertices[v].y) / 2};
}

namespace {

// Exact counterclockwise-from-positive-x ordering of directions.
bool angle_less(const Point& d1, const Point& d2) {
    auto half = [](const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    if (half(d1) != half(d2)) return half(d1) < half(d2);
    return cross(d1, d2) > 0;
}

// First edge hit by a leftward ray from `from`, perturbed infinitesimally
// upward so it never runs through vertices.  Edges whose vertices all belong
// to component `skip_comp` are ignored (-1 skips nothing).  Returns the edge
// index, or nullopt if the ray escapes.
std::optional<int> ray_west_hit(const Arrangement& arr, const Point& from, int skip_comp,
                                const std::vector<int>& comp_of_vertex) {
    std::optional<int> best;
    Scalar best_x, best_slope;
    for (int e = 0; e < arr.num_edges(); ++e) {
        auto [ui, vi] = arr.edge_ends(e);
        if (skip_comp >= 0 && comp_of_vertex[ui] == skip_comp) continue;
        const Point& u = arr.vertices[ui];
        const Point& v = arr.vertices[vi];
        const bool u_up = u.y > from.y;
        const bool v_up = v.y > from.y;
        if (u_up == v_up) continue;
        const Point& lo = u_up ? v : u;
        const Point& hi = u_up ? u : v;
        const Scalar x0 = lo.x + (from.y - lo.y) / (hi.y - lo.y) * (hi.x - lo.x);
        if (x0 >= from.x) continue;
        const Scalar slope = (hi.x - lo.x) / (hi.y - lo.y);
        if (!best || x0 > best_x || (x0 == best_x && slope > best_slope)) {
            best = e;
            best_x = x0;
            best_slope = slope;
        }
    }
    return best;
}

// Half-edge of e directed downward (larger y to smaller); the face on its
// left is the face just east of the edge.
int downward_half(const Arrangement& arr, int e) {
    const int h = 2 * e;
    const Point& o = arr.vertices[arr.half[h].origin];
    const Point& t = arr.vertices[arr.target(h)];
    return o.y > t.y ? h : h + 1;
}

}  // namespace

Arrangement build_arrangement(const std::vector<Segment>& input, const PolygonWithHoles* clip) {
    Arrangement arr;
    arr.segments = input;
    arr.real_segment_count = (int)input.size();
    for (int i = 0; i < (int)input.size(); ++i) {
        require(input[i].id == i, ErrorCode::Precondition, "segment ids must be 0..n-1 in order");
        require(input[i].p != input[i].q, ErrorCode::Degenerate, "zero-length segment");
    }
    if (clip) {
        validate_polygon(*clip);
        auto bseg = boundary_segments(*clip, arr.real_segment_count);
        arr.segments.insert(arr.segments.end(), bseg.begin(), bseg.end());
        arr.clipped = true;
    }
    const int n = (int)arr.segments.size();

    std::map<Point, int> vid;
    auto vertex_of = [&](const Point& p) {
        auto [it, fresh] = vid.try_emplace(p, (int)arr.vertices.size());
        if (fresh) arr.vertices.push_back(p);
        return it->second;
    };

    std::vector<std::vector<Point>> pts(n);
    for (int i = 0; i < n; ++i) {
        pts[i].push_back(arr.segments[i].p);
        pts[i].push_back(arr.segments[i].q);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (auto x = seg_intersect(arr.segments[i], arr.segments[j])) {
                pts[i].push_back(*x);
                pts[j].push_back(*x);
            }

    struct E {
        int u, v, color;
    };
    std::vector<E> edges;
    arr.points_on_segment.resize(n);
    for (int i = 0; i < n; ++i) {
        const Point base = arr.segments[i].p;
        const Point dir = arr.segments[i].q - base;
        std::sort(pts[i].begin(), pts[i].end(), [&](const Point& a, const Point& b) {
            return dot(a - base, dir) < dot(b - base, dir);
        });
        pts[i].erase(std::unique(pts[i].begin(), pts[i].end()), pts[i].end());
        for (const Point& p : pts[i]) arr.points_on_segment[i].push_back(vertex_of(p));
        for (size_t k = 0; k + 1 < pts[i].size(); ++k)
            edges.push_back({arr.points_on_segment[i][k], arr.points_on_segment[i][k + 1], i});
    }

    const int ne = (int)edges.size();
    arr.half.resize(2 * ne);
    for (int k = 0; k < ne; ++k) {
        arr.half[2 * k] = {edges[k].u, 2 * k + 1, -1, -1, edges[k].color};
        arr.half[2 * k + 1] = {edges[k].v, 2 * k, -1, -1, edges[k].color};
    }

    // rotation order at each vertex, counterclockwise
    const int nv = (int)arr.vertices.size();
    std::vector<std::vector<int>> out(nv);
    for (int h = 0; h < 2 * ne; ++h) out[arr.half[h].origin].push_back(h);
    for (int v = 0; v < nv; ++v)
        std::sort(out[v].begin(), out[v].end(), [&](int h1, int h2) {
            const Point d1 = arr.vertices[arr.target(h1)] - arr.vertices[v];
            const Point d2 = arr.vertices[arr.target(h2)] - arr.vertices[v];
            return angle_less(d1, d2);
        });
    std::vector<int> pos(2 * ne);
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < (int)out[v].size(); ++i) pos[out[v][i]] = i;

    // next: continue the walk keeping the face on the left; at the target
    // vertex take the clockwise neighbor of the twin
    for (int h = 0; h < 2 * ne; ++h) {
        const int t = arr.half[h].twin;
        const auto& ring = out[arr.half[t].origin];
        arr.half[h].next = ring[(pos[t] + (int)ring.size() - 1) % ring.size()];
    }

    // trace boundary cycles
    std::vector<int> cycle_of(2 * ne, -1);
    std::vector<std::vector<int>> cycles;
    std::vector<Scalar> area2;
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (cycle_of[h0] != -1) continue;
        const int c = (int)cycles.size();
        cycles.emplace_back();
        Scalar a2 = 0;
        int h = h0;
        do {
            cycle_of[h] = c;
            cycles[c].push_back(h);
            a2 += cross(arr.vertices[arr.half[h].origin], arr.vertices[arr.target(h)]);
            h = arr.half[h].next;
        } while (h != h0);
        area2.push_back(a2);
    }

    // connected components of the union
    UnionFind uf(nv);
    for (const E& e : edges) uf.unite(e.u, e.v);
    std::vector<int> comp_of(nv);
    std::map<int, int> comp_ids;
    for (int v = 0; v < nv; ++v)
        comp_of[v] = comp_ids.try_emplace(uf.find(v), (int)comp_ids.size()).first->second;
    arr.components = (int)comp_ids.size();

    // bounded faces: one per positive-area cycle
    for (size_t c = 0; c < cycles.size(); ++c)
        if (area2[c] > 0) {
            const int f = (int)arr.faces.size();
            arr.faces.push_back(Arrangement::Face{});
            arr.faces[f].cycles.push_back(cycles[c][0]);
            for (int h : cycles[c]) arr.half[h].face = f;
        }
    arr.unbounded_face = (int)arr.faces.size();
    arr.faces.push_back(Arrangement::Face{});
    arr.faces[arr.unbounded_face].unbounded = true;

    // every component has exactly one non-positive cycle: its outer walk,
    // which bounds the face the component floats in
    std::vector<int> outer_cycle(arr.components, -1);
    std::vector<int> comp_lexmin(arr.components, -1);
    for (size_t c = 0; c < cycles.size(); ++c) {
        if (area2[c] > 0) continue;
        const int comp = comp_of[arr.half[cycles[c][0]].origin];
        require(outer_cycle[comp] == -1, ErrorCode::Internal,
                "component traced two outer walks");
        outer_cycle[comp] = (int)c;
    }
    for (int v = 0; v < nv; ++v) {
        int& m = comp_lexmin[comp_of[v]];
        if (m == -1 || arr.vertices[v] < arr.vertices[m]) m = v;
    }

    // resolution by increasing lex-min vertex: a westward ray from a
    // component's lex-min vertex can only hit components reaching further west
    std::vector<int> order(arr.components);
    for (int i = 0; i < arr.components; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return arr.vertices[comp_lexmin[a]] < arr.vertices[comp_lexmin[b]];
    });
    for (int comp : order) {
        require(outer_cycle[comp] != -1, ErrorCode::Internal, "component lost its outer walk");
        auto hit = ray_west_hit(arr, arr.vertices[comp_lexmin[comp]], comp, comp_of);
        int f;
        if (!hit) {
            f = arr.unbounded_face;
        } else {
            // the hit component reaches further west, so it was resolved
            // earlier and its faces are already set
            f = arr.half[downward_half(arr, *hit)].face;
            require(f != -1, ErrorCode::Internal, "hole resolution order broken");
        }
        for (int h : cycles[outer_cycle[comp]]) arr.half[h].face = f;
        arr.faces[f].cycles.push_back(cycles[outer_cycle[comp]][0]);
    }

    require(nv - ne + (int)arr.faces.size() == 1 + arr.components, ErrorCode::Internal,
            "Euler relation violated");

    if (arr.clipped) {
        // parity of clip-boundary crossings on any dual path from the
        // unbounded face: even means outside the clip region
        std::vector<int> parity(arr.faces.size(), -1);
        parity[arr.unbounded_face] = 0;
        std::queue<int> bfs;
        bfs.push(arr.unbounded_face);
        std::vector<std::vector<std::pair<int, int>>> adj(arr.faces.size());  // (face, toggle)
        for (int e = 0; e < ne; ++e) {
            const int f1 = arr.half[2 * e].face;
            const int f2 = arr.half[2 * e + 1].face;
            const int toggle = arr.edge_color(e) >= arr.real_segment_count ? 1 : 0;
            adj[f1].push_back({f2, toggle});
            adj[f2].push_back({f1, toggle});
        }
        while (!bfs.empty()) {
            const int f = bfs.front();
            bfs.pop();
            for (auto [g, t] : adj[f]) {
                if (parity[g] == -1) {
                    parity[g] = parity[f] ^ t;
                    bfs.push(g);
                } else {
                    require(parity[g] == (parity[f] ^ t), ErrorCode::Internal,
                            "clip parity is inconsistent");
                }
            }
        }
        for (size_t f = 0; f < arr.faces.size(); ++f) {
            require(parity[f] != -1, ErrorCode::Internal, "face unreachable in the dual");
            arr.faces[f].exterior = parity[f] % 2 == 0;
        }
        for (int e = 0; e < ne; ++e)
            if (arr.edge_color(e) < arr.real_segment_count)
                require(!arr.faces[arr.half[2 * e].face].exterior &&
                            !arr.faces[arr.half[2 * e + 1].face].exterior,
                        ErrorCode::BadPolygon, "segment leaves the clip region");
    }

    return arr;
}

int locate(const Arrangement& arr, const Point& p) {
    for (const Segment& s : arr.segments)
        if (on_segment(p, s)) fail(ErrorCode::Degenerate, "query point lies on a segment");
    static const std::vector<int> no_comps;
    auto hit = ray_west_hit(arr, p, -1, no_comps);
    if (!hit) return arr.unbounded_face;
    return arr.half[downward_half(arr, *hit)].face;
}

int face_count(const Arrangement& arr) { return (int)arr.faces.size(); }

DualGraph dual(const Arrangement& arr) {
    DualGraph g;
    g.num_faces = (int)arr.faces.size();
    for (int e = 0; e < arr.num_edges(); ++e)
        g.edges.push_back({arr.half[2 * e].face, arr.half[2 * e + 1].face, arr.edge_color(e), e});
    return g;
}

bool same_cell(const std::vector<Segment>& segments, const Point& a, const Point& b,
               const PolygonWithHoles* clip) {
    const Arrangement arr = build_arrangement(segments, clip);
    const int fa = locate(arr, a);
    const int fb = locate(arr, b);
    if (clip) {
        require(arr.face_interior(fa) && arr.face_interior(fb), ErrorCode::Precondition,
                "reference point outside the clip region");
    }
    return fa == fb;
}

}  // namespace segcells
