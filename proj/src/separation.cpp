#include "segcells/separation.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <thread>

#include "segcells/errors.hpp"

namespace segcells {

std::vector<Scalar> sp_distances_heap(const IntersectionGraph& g, int root) {
    std::vector<Scalar> dist(g.n, Scalar(-1));  // -1 marks unreachable
    using Item = std::pair<Scalar, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<char> done(g.n, 0);
    dist[root] = 0;
    pq.push({Scalar(0), root});
    while (!pq.empty()) {
        const int v = pq.top().second;
        const Scalar d = pq.top().first;
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (int e : g.adj[v]) {
            const int w = g.other(e, v);
            const Scalar nd = d + g.edges[e].weight;
            if (dist[w] < 0 || nd < dist[w]) {
                dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    return dist;
}

std::vector<Scalar> sp_distances_bucket(const IntersectionGraph& g, int root) {
    std::vector<long> small(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Scalar& w = g.edges[e].weight;
        require(w == 0 || w == 1 || w == 2, ErrorCode::Params,
                "bucket distances need every edge weight in {0,1,2}");
        small[e] = w == 0 ? 0 : w == 1 ? 1 : 2;
    }
    std::vector<long> dl(g.n, -1);
    std::vector<char> done(g.n, 0);
    std::vector<std::vector<int>> buckets(2 * g.n + 1);
    dl[root] = 0;
    buckets[0].push_back(root);
    for (size_t d = 0; d < buckets.size(); ++d)
        for (size_t i = 0; i < buckets[d].size(); ++i) {  // grows while scanning
            const int v = buckets[d][i];
            if (done[v] || dl[v] != (long)d) continue;
            done[v] = 1;
            for (int e : g.adj[v]) {
                const int w = g.other(e, v);
                const long nd = (long)d + small[e];
                if (dl[w] < 0 || nd < dl[w]) {
                    dl[w] = nd;
                    buckets[nd].push_back(w);
                }
            }
        }
    std::vector<Scalar> dist(g.n);
    for (int v = 0; v < g.n; ++v) dist[v] = dl[v];
    return dist;
}

SpTree sp_tree(const IntersectionGraph& g, int root) {
    require(root >= 0 && root < g.n, ErrorCode::Params, "root out of range");
    bool small = true;
    for (const auto& e : g.edges) small &= e.weight == 0 || e.weight == 1 || e.weight == 2;
    SpTree t;
    t.root = root;
    t.dist = small ? sp_distances_bucket(g, root) : sp_distances_heap(g, root);
    t.reached.assign(g.n, 0);
    t.parent.assign(g.n, -1);
    t.parent_edge.assign(g.n, -1);
    t.first_hop.assign(g.n, -1);
    t.depth.assign(g.n, 0);

    // settle nodes in (dist, id) order among those with a settled optimal
    // predecessor; the parent is the smallest-id predecessor settled so far.
    // With positive weights this is simply the smallest-id optimal
    // predecessor; with 0-weight plateaus it stays deterministic and acyclic.
    using Item = std::pair<Scalar, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<char> queued(g.n, 0), done(g.n, 0);
    pq.push({Scalar(0), root});
    queued[root] = 1;
    while (!pq.empty()) {
        const int v = pq.top().second;
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        t.reached[v] = 1;
        t.order.push_back(v);
        if (v != root) {
            t.depth[v] = t.depth[t.parent[v]] + 1;
            t.first_hop[v] = t.parent[v] == root ? v : t.first_hop[t.parent[v]];
        }
        for (int e : g.adj[v]) {
            const int w = g.other(e, v);
            if (done[w]) continue;
            if (t.dist[w] < 0 || t.dist[v] + g.edges[e].weight != t.dist[w]) continue;
            if (t.parent[w] == -1 || v < t.parent[w]) {
                t.parent[w] = v;
                t.parent_edge[w] = e;
            }
            if (!queued[w]) {
                queued[w] = 1;
                pq.push({t.dist[w], w});
            }
        }
    }
    return t;
}

void annotate_tree(SpTree& t, const IntersectionGraph& g, const Point& a, const Point& b) {
    t.entry.assign(g.n, Point{});
    t.cross.assign(g.n, 0);
    for (int v : t.order) {
        if (v == t.root) continue;
        const int p = t.parent[v];
        t.entry[v] = g.edges[t.parent_edge[v]].x;
        if (p != t.root)
            t.cross[v] =
                t.cross[p] + crossing_number(Polyline{{t.entry[p], t.entry[v]}, false}, a, b);
    }
}

long walk_crossing(const SpTree& t, const IntersectionGraph& g, int edge, const Point& a,
                   const Point& b) {
    const int u = g.edges[edge].s;
    const int v = g.edges[edge].t;
    const Point& X = g.edges[edge].x;
    auto piece = [&](const Point& p, const Point& q) {
        return crossing_number(Polyline{{p, q}, false}, a, b);
    };
    long total = 0;
    Point exit_u = X, exit_v = X;
    if (u != t.root) {
        total += t.cross[u];
        total += piece(t.entry[u], X);
        exit_u = t.entry[t.first_hop[u]];
    }
    if (v != t.root) {
        total += piece(X, t.entry[v]);
        total -= t.cross[v];
        exit_v = t.entry[t.first_hop[v]];
    }
    total += piece(exit_v, exit_u);  // close along the root segment
    return total;
}

long walk_crossing_direct(const SpTree& t, const IntersectionGraph& g, int edge, const Point& a,
                          const Point& b) {
    const int u = g.edges[edge].s;
    const int v = g.edges[edge].t;
    std::vector<Point> pts;
    auto push_path = [&](int w, bool reversed) {
        std::vector<Point> ps;
        for (int x = w; x != t.root; x = t.parent[x]) ps.push_back(t.entry[x]);
        if (!reversed) std::reverse(ps.begin(), ps.end());
        pts.insert(pts.end(), ps.begin(), ps.end());
    };
    if (u != t.root) push_path(u, false);
    pts.push_back(g.edges[edge].x);
    if (v != t.root) push_path(v, true);
    return crossing_number(Polyline{pts, true}, a, b);
}

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.root != b.root) return a.root < b.root;
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
}

namespace {

int lca_of(const SpTree& t, int u, int v) {
    while (t.depth[u] > t.depth[v]) u = t.parent[u];
    while (t.depth[v] > t.depth[u]) v = t.parent[v];
    while (u != v) {
        u = t.parent[u];
        v = t.parent[v];
    }
    return u;
}

}  // namespace

std::optional<Candidate> best_candidate_for_root(const IntersectionGraph& g, int root,
                                                 const Point& a, const Point& b) {
    SpTree t = sp_tree(g, root);
    annotate_tree(t, g, a, b);
    std::optional<Candidate> best;
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        const int u = g.edges[e].s;
        const int v = g.edges[e].t;
        if (!t.reached[u] || !t.reached[v]) continue;
        if (walk_crossing(t, g, e, a, b) % 2 == 0) continue;
        const int l = lca_of(t, u, v);
        Candidate c;
        c.length = t.dist[u] + g.edges[e].weight + t.dist[v] - t.dist[l] * 2;
        c.root = root;
        c.s = u;
        c.t = v;
        if (!best || candidate_less(c, *best)) best = c;
    }
    return best;
}

std::vector<int> candidate_cycle(const SpTree& t, int u, int v) {
    const int l = lca_of(t, u, v);
    std::vector<int> out;
    for (int x = u; x != l; x = t.parent[x]) out.push_back(x);
    out.push_back(l);
    for (int x = v; x != l; x = t.parent[x]) out.push_back(x);
    return out;
}

namespace {

std::vector<std::optional<Candidate>> all_root_candidates(const IntersectionGraph& g,
                                                          const Point& a, const Point& b,
                                                          int threads) {
    std::vector<std::optional<Candidate>> out(g.n);
    if (threads <= 1) {
        for (int r = 0; r < g.n; ++r) out[r] = best_candidate_for_root(g, r, a, b);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errs(g.n);
    auto work = [&] {
        for (int r; (r = next.fetch_add(1)) < g.n;) {
            try {
                out[r] = best_candidate_for_root(g, r, a, b);
            } catch (...) {
                errs[r] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < std::min(threads, g.n); ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& ep : errs)
        if (ep) std::rethrow_exception(ep);
    return out;
}

SeparationResult solve_common(const std::vector<Segment>& all, int real_count,
                              const PolygonWithHoles* clip, const Point& a, const Point& b,
                              int threads) {
    const IntersectionGraph g = build_intersection_graph(all);
    for (int i = 0; i < real_count; ++i)
        require(!on_segment(a, all[i]) && !on_segment(b, all[i]), ErrorCode::Degenerate,
                "a reference point lies on a segment");
    {
        std::vector<Segment> real(all.begin(), all.begin() + real_count);
        require(!same_cell(real, a, b, clip), ErrorCode::SameCell,
                "the reference points already share a cell");
    }
    const auto results = all_root_candidates(g, a, b, threads);
    std::optional<Candidate> best;
    for (const auto& c : results)
        if (c && (!best || candidate_less(*c, *best))) best = *c;
    require(best.has_value(), ErrorCode::Internal, "no separating cycle for separable points");

    SpTree t = sp_tree(g, best->root);
    annotate_tree(t, g, a, b);
    int winner_edge = -1;
    for (int e : g.adj[best->s])
        if (g.other(e, best->s) == best->t) winner_edge = e;
    require(winner_edge >= 0, ErrorCode::Internal, "winner edge vanished");
    require(walk_crossing_direct(t, g, winner_edge, a, b) % 2 != 0, ErrorCode::Internal,
            "winner walk lost its odd crossing parity");

    std::vector<int> cyc = candidate_cycle(t, best->s, best->t);
    std::sort(cyc.begin(), cyc.end());
    Scalar weight = 0;
    for (int v : cyc) weight += all[v].weight;
    require(weight * 2 == best->length, ErrorCode::Internal, "cycle weight mismatch");

    std::vector<int> chosen;
    for (int v : cyc)
        if (v < real_count) chosen.push_back(v);
    {
        std::vector<Segment> sub;
        for (int v : chosen) {
            Segment s = all[v];
            s.id = (int)sub.size();
            sub.push_back(s);
        }
        require(!same_cell(sub, a, b, clip), ErrorCode::Internal,
                "chosen subset fails to separate the reference points");
    }
    return SeparationResult{weight, chosen, *best};
}

}  // namespace

SeparationResult solve_separation(const std::vector<Segment>& segments, const Point& a,
                                  const Point& b, int threads) {
    return solve_common(segments, (int)segments.size(), nullptr, a, b, threads);
}

SeparationResult solve_separation_in_polygon(const PolygonWithHoles& poly,
                                             const std::vector<Segment>& segments, const Point& a,
                                             const Point& b, int threads) {
    validate_restricted(poly, segments, a, b);
    std::vector<Segment> all = segments;
    const auto bseg = boundary_segments(poly, (int)segments.size());
    all.insert(all.end(), bseg.begin(), bseg.end());
    return solve_common(all, (int)segments.size(), &poly, a, b, threads);
}

}  // namespace segcells
