#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <set>

#include "segcells/arrangement.hpp"
#include "segcells/separation.hpp"
#include "support/util.hpp"

using namespace segcells;
using testutil::ip;

namespace {

// Exhaustive reference: try every subset, keep the lightest that separates.
struct BruteResult {
    Scalar weight;
    std::vector<int> ids;
};

std::optional<BruteResult> brute_separation(const std::vector<Segment>& segs, const Point& a,
                                            const Point& b, const PolygonWithHoles* clip) {
    const int n = (int)segs.size();
    std::optional<BruteResult> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Segment> sub;
        std::vector<int> ids;
        Scalar w = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                Segment s = segs[i];
                s.id = (int)sub.size();
                sub.push_back(s);
                ids.push_back(i);
                w += s.weight;
            }
        if (!same_cell(sub, a, b, clip))
            if (!best || w < best->weight || (w == best->weight && ids < best->ids))
                best = BruteResult{w, ids};
    }
    return best;
}

// Eight segments whose crossing pattern drives the worked examples: a long
// base, three transversals from it, and a pocket of three short segments two
// of which only meet near the top.
std::vector<Segment> pocket_instance() {
    return {
        {0, ip(0, 0), ip(800, 0)},       {1, ip(80, -40), ip(320, 440)},
        {2, ip(680, -80), ip(720, 120)}, {3, ip(480, -40), ip(360, 440)},
        {4, ip(640, 40), ip(352, 340)},  {5, ip(580, 80), ip(274, 335)},
        {6, ip(0, 320), ip(380, 320)},   {7, ip(208, 316), ip(304, 334)},
    };
}

std::vector<Segment> random_instance(Rng& rng, int n, long box) {
    std::vector<Segment> segs;
    while ((int)segs.size() < n) {
        Segment s{(int)segs.size(), ip(rng.uniform(-box, box), rng.uniform(-box, box)),
                  ip(rng.uniform(-box, box), rng.uniform(-box, box))};
        if (s.p == s.q) continue;
        bool ok = true;
        for (const Segment& t : segs) {
            try {
                seg_intersect(s, t);
            } catch (const Error&) {
                ok = false;
            }
        }
        if (ok) segs.push_back(s);
    }
    return segs;
}

Point off_segments_point(Rng& rng, const std::vector<Segment>& segs, long box) {
    while (true) {
        const Point p = ip(rng.uniform(-box, box), rng.uniform(-box, box));
        bool on = false;
        for (const Segment& s : segs) on |= on_segment(p, s);
        if (!on) return p;
    }
}

}  // namespace

TEST_CASE("pocket instance: crossing pattern and tree structure") {
    const auto segs = pocket_instance();
    const IntersectionGraph g = build_intersection_graph(segs);
    std::set<std::pair<int, int>> got;
    for (const auto& e : g.edges) got.insert({e.s, e.t});
    const std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {0, 3}, {1, 6}, {1, 7}, {3, 4},
                                            {3, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
    CHECK(got == want);

    const SpTree t = sp_tree(g, 0);
    const std::vector<int> want_parent{-1, 0, 0, 0, 3, 3, 1, 1};
    const std::vector<int> want_hop{-1, 1, 2, 3, 3, 3, 1, 1};
    CHECK(t.parent == want_parent);
    CHECK(t.first_hop == want_hop);
    for (int v = 1; v < 8; ++v) CHECK(t.dist[v] == (v <= 3 ? 2 : 4));
    CHECK(t.dist[0] == 0);
}

TEST_CASE("pocket instance: separation answers") {
    const auto segs = pocket_instance();
    const Point b = ip(500, 500);

    SUBCASE("unit weights, point in the small pocket") {
        const auto res = solve_separation(segs, ip(240, 321), b);
        CHECK(res.weight == 3);
        CHECK(res.chosen == std::vector<int>{1, 6, 7});
        const auto br = brute_separation(segs, ip(240, 321), b, nullptr);
        REQUIRE(br.has_value());
        CHECK(br->weight == res.weight);
    }
    SUBCASE("unit weights, point in the central cell") {
        const auto res = solve_separation(segs, ip(300, 100), b);
        CHECK(res.weight == 5);
        CHECK(res.chosen == std::vector<int>{0, 1, 3, 4, 6});
        const auto br = brute_separation(segs, ip(300, 100), b, nullptr);
        REQUIRE(br.has_value());
        CHECK(br->weight == res.weight);
    }
    SUBCASE("weighted variant changes nothing here but the totals") {
        auto ws = segs;
        const long w[8] = {3, 1, 4, 1, 5, 9, 2, 6};
        for (int i = 0; i < 8; ++i) ws[i].weight = w[i];
        const auto pocket = solve_separation(ws, ip(240, 321), b);
        CHECK(pocket.weight == 9);
        CHECK(pocket.chosen == std::vector<int>{1, 6, 7});
        const auto central = solve_separation(ws, ip(300, 100), b);
        CHECK(central.weight == 12);
        CHECK(central.chosen == std::vector<int>{0, 1, 3, 4, 6});  // picks 4 over 5
    }
}

TEST_CASE("triangle and square rings") {
    const std::vector<Segment> tri{{0, ip(0, 0), ip(8, 0), 1},
                                   {1, ip(8, 0), ip(0, 8), 2},
                                   {2, ip(0, 8), ip(0, 0), 3}};
    const auto tres = solve_separation(tri, ip(1, 1), ip(10, 10));
    CHECK(tres.weight == 6);
    CHECK(tres.chosen == std::vector<int>{0, 1, 2});
    CHECK(tres.witness.length == 12);

    const std::vector<Segment> sq{{0, ip(0, 0), ip(6, 0)},
                                  {1, ip(6, 0), ip(6, 6)},
                                  {2, ip(6, 6), ip(0, 6)},
                                  {3, ip(0, 6), ip(0, 0)}};
    const auto sres = solve_separation(sq, ip(3, 3), ip(9, 9));
    CHECK(sres.weight == 4);
    CHECK(sres.chosen == std::vector<int>{0, 1, 2, 3});
    CHECK(sres.witness.length == 8);
}

TEST_CASE("separation inside a polygon") {
    const PolygonWithHoles tri{{ip(0, 0), ip(16, 0), ip(0, 16)}, {}};
    const std::vector<Segment> chords{{0, ip(0, 4), ip(12, 4), 5}, {1, ip(0, 6), ip(10, 6), 3}};
    const auto below = solve_separation_in_polygon(tri, chords, ip(1, 1), ip(1, 10));
    CHECK(below.weight == 3);
    CHECK(below.chosen == std::vector<int>{1});
    const auto between = solve_separation_in_polygon(tri, chords, ip(1, 5), ip(1, 10));
    CHECK(between.weight == 3);
    CHECK(between.chosen == std::vector<int>{1});
    const auto oracle = brute_separation(chords, ip(1, 1), ip(1, 10), &tri);
    REQUIRE(oracle.has_value());
    CHECK(oracle->weight == 3);

    // same side of both chords: nothing to do
    CHECK_THROWS_AS(solve_separation_in_polygon(tri, chords, ip(1, 1), ip(2, 1)), Error);
    // outside the region
    CHECK_THROWS_AS(solve_separation_in_polygon(tri, chords, ip(1, 1), ip(20, 20)), Error);
    // chord not reaching the boundary
    const std::vector<Segment> dangling{{0, ip(0, 4), ip(11, 4)}};
    CHECK_THROWS_AS(solve_separation_in_polygon(tri, dangling, ip(1, 1), ip(1, 10)), Error);
}

TEST_CASE("error paths") {
    const auto segs = pocket_instance();
    CHECK_THROWS_AS(solve_separation(segs, ip(100, 0), ip(500, 500)), Error);  // a on a segment
    CHECK_THROWS_AS(solve_separation(segs, ip(500, 500), ip(600, 500)), Error);  // same cell
    const std::vector<Segment> cross{{0, ip(0, 0), ip(4, 4)}, {1, ip(0, 4), ip(4, 0)}};
    CHECK_THROWS_AS(solve_separation(cross, ip(1, 2), ip(3, 2)), Error);  // two segments: one cell
    std::vector<Segment> neg = cross;
    neg[0].weight = -1;
    CHECK_THROWS_AS(solve_separation(neg, ip(1, 2), ip(3, 2)), Error);
}

TEST_CASE("random instances agree with the exhaustive reference") {
    Rng rng(0x5eba7a7e);
    int separable = 0;
    for (int iter = 0; iter < 30; ++iter) {
        // a ring guarantees a separable pair; clutter segments spice up the
        // search space
        const Polyline ring = testutil::random_star_polyline(rng, 3 + (int)rng.uniform(0, 2), 8);
        std::vector<Segment> segs;
        for (auto [i, j] : effective_edges(ring))
            segs.push_back(Segment{(int)segs.size(), ring.vertices[i], ring.vertices[j]});
        for (const Segment& extra : random_instance(rng, 2 + (int)rng.uniform(0, 2), 10)) {
            Segment s = extra;
            s.id = (int)segs.size();
            bool ok = true;
            for (const Segment& t : segs) {
                try {
                    seg_intersect(s, t);
                } catch (const Error&) {
                    ok = false;
                }
            }
            if (ok) segs.push_back(s);
        }
        for (auto& s : segs)
            if (rng.coin()) s.weight = Scalar((long)rng.uniform(1, 9)) / (long)rng.uniform(1, 3);
        Point a, b;
        int tries = 0;
        do {
            a = off_segments_point(rng, segs, 9);
        } while (point_in_closed_polyline(a, ring) != PointSide::Inside && ++tries < 200);
        do {
            b = off_segments_point(rng, segs, 11);
        } while (point_in_closed_polyline(b, ring) != PointSide::Outside && ++tries < 400);
        if (tries >= 200) continue;
        const auto br = brute_separation(segs, a, b, nullptr);
        if (!br) {
            CHECK_THROWS_AS(solve_separation(segs, a, b), Error);
            continue;
        }
        ++separable;
        const auto res = solve_separation(segs, a, b);
        CHECK(res.weight == br->weight);
        Scalar total = 0;
        std::vector<Segment> sub;
        for (int i : res.chosen) {
            total += segs[i].weight;
            Segment s = segs[i];
            s.id = (int)sub.size();
            sub.push_back(s);
        }
        CHECK(total == res.weight);
        CHECK_FALSE(same_cell(sub, a, b));
    }
    CHECK(separable >= 20);  // the sample must actually exercise the solver
}

TEST_CASE("incremental walk crossings match the rebuilt polylines") {
    Rng rng(0x3a1c0de5);
    for (int iter = 0; iter < 20; ++iter) {
        const auto segs = random_instance(rng, 4 + (int)rng.uniform(1, 5), 9);
        const IntersectionGraph g = build_intersection_graph(segs);
        const Point a = off_segments_point(rng, segs, 10);
        const Point b = off_segments_point(rng, segs, 10);
        if (a == b) continue;
        for (int root = 0; root < g.n; ++root) {
            SpTree t = sp_tree(g, root);
            annotate_tree(t, g, a, b);
            for (int e = 0; e < (int)g.edges.size(); ++e) {
                if (!t.reached[g.edges[e].s] || !t.reached[g.edges[e].t]) continue;
                CHECK(walk_crossing(t, g, e, a, b) == walk_crossing_direct(t, g, e, a, b));
            }
        }
    }
}

TEST_CASE("heap and bucket distances coincide on small weights") {
    Rng rng(0xb0c4e7ed);
    for (int iter = 0; iter < 25; ++iter) {
        auto segs = random_instance(rng, 4 + (int)rng.uniform(1, 6), 9);
        for (auto& s : segs) s.weight = (long)rng.uniform(0, 1);
        const IntersectionGraph g = build_intersection_graph(segs);
        for (int root = 0; root < g.n; ++root) {
            const auto heap = sp_distances_heap(g, root);
            const auto bucket = sp_distances_bucket(g, root);
            CHECK(heap == bucket);
            const SpTree t = sp_tree(g, root);
            CHECK(t.dist == heap);
            // parents stay valid and acyclic even across 0-weight plateaus
            for (int v = 0; v < g.n; ++v) {
                if (!t.reached[v] || v == root) continue;
                const int p = t.parent[v];
                REQUIRE(p >= 0);
                CHECK(t.reached[p]);
                CHECK(t.dist[p] + g.edges[t.parent_edge[v]].weight == t.dist[v]);
                int x = v, steps = 0;
                while (x != root && steps <= g.n) {
                    x = t.parent[x];
                    ++steps;
                }
                CHECK(x == root);
            }
        }
    }
}

TEST_CASE("thread count does not change the result") {
    const auto segs = pocket_instance();
    const auto one = solve_separation(segs, ip(300, 100), ip(500, 500), 1);
    const auto four = solve_separation(segs, ip(300, 100), ip(500, 500), 4);
    CHECK(one.weight == four.weight);
    CHECK(one.chosen == four.chosen);
    CHECK(one.witness.root == four.witness.root);
    CHECK(one.witness.s == four.witness.s);
    CHECK(one.witness.t == four.witness.t);
    CHECK(one.witness.length == four.witness.length);
}
