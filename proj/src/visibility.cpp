#include "segcells/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "segcells/errors.hpp"

namespace segcells {

namespace {

// exact square root of a nonnegative rational, if it has one
std::optional<Scalar> sqrt_rational(const Scalar& x) {
    const BigInt n = num(x);
    const BigInt d = den(x);
    const BigInt sn = boost::multiprecision::sqrt(n);
    const BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Scalar(Scalar(sn) / Scalar(sd));
}

// rational enclosure of sqrt(q) with absolute error below 2^-bits
std::pair<Scalar, Scalar> sqrt_interval(const Scalar& q, int bits) {
    const BigInt n = num(q);
    const BigInt d = den(q);
    BigInt t = n * d;
    t <<= 2 * bits;
    const BigInt s = boost::multiprecision::sqrt(t);  // floor
    BigInt scale = d;
    scale <<= bits;
    return {Scalar(Scalar(s) / Scalar(scale)), Scalar(Scalar(s + 1) / Scalar(scale))};
}

}  // namespace

int sqrt_sum_sign(const std::vector<std::pair<Scalar, Scalar>>& terms) {
    struct Group {
        Scalar rep;    // representative radicand
        Scalar coeff;  // rational multiple of sqrt(rep)
    };
    std::vector<Group> groups;
    for (const auto& [c, m] : terms) {
        require(m >= 0, ErrorCode::Internal, "negative radicand");
        if (c == 0 || m == 0) continue;
        bool placed = false;
        for (auto& g : groups)
            if (auto r = sqrt_rational(m / g.rep)) {
                g.coeff += c * *r;
                placed = true;
                break;
            }
        if (!placed) groups.push_back({m, c});
    }
    groups.erase(std::remove_if(groups.begin(), groups.end(),
                                [](const Group& g) { return g.coeff == 0; }),
                 groups.end());
    if (groups.empty()) return 0;
    if (groups.size() == 1) return sign(groups[0].coeff);
    if (groups.size() == 2) {
        const int s1 = sign(groups[0].coeff);
        const int s2 = sign(groups[1].coeff);
        if (s1 == s2) return s1;
        const Scalar l = groups[0].coeff * groups[0].coeff * groups[0].rep;
        const Scalar r = groups[1].coeff * groups[1].coeff * groups[1].rep;
        require(l != r, ErrorCode::Internal, "incommensurable roots compared equal");
        return l > r ? s1 : s2;
    }
    for (int bits = 64; bits <= 1 << 16; bits *= 2) {
        Scalar lo = 0, hi = 0;
        for (const auto& g : groups) {
            const auto [slo, shi] = sqrt_interval(g.rep, bits);
            if (g.coeff > 0) {
                lo += g.coeff * slo;
                hi += g.coeff * shi;
            } else {
                lo += g.coeff * shi;
                hi += g.coeff * slo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    fail(ErrorCode::Degenerate, "cannot separate sums of square roots");
}

void PathLength::add_sqrt(const Scalar& squared) {
    require(squared >= 0, ErrorCode::Internal, "negative squared length");
    if (squared == 0) return;
    rad_.insert(std::lower_bound(rad_.begin(), rad_.end(), squared), squared);
}

PathLength PathLength::plus_sqrt(const Scalar& squared) const {
    PathLength out = *this;
    out.add_sqrt(squared);
    return out;
}

double PathLength::approx() const {
    double total = 0;
    for (const Scalar& q : rad_)
        total += std::sqrt(num(q).convert_to<double>() / den(q).convert_to<double>());
    return total;
}

int compare_lengths(const PathLength& a, const PathLength& b) {
    std::vector<std::pair<Scalar, Scalar>> terms;
    for (const Scalar& q : a.radicands()) terms.push_back({Scalar(1), q});
    for (const Scalar& q : b.radicands()) terms.push_back({Scalar(-1), q});
    return sqrt_sum_sign(terms);
}

namespace {

Scalar squared_dist(const Point& p, const Point& q) {
    const Point d = q - p;
    return dot(d, d);
}

std::vector<const std::vector<Point>*> domain_rings(const VisibilityDomain& dom) {
    std::vector<const std::vector<Point>*> rings{&dom.poly.outer};
    if (!dom.outside)
        for (const auto& h : dom.poly.holes) rings.push_back(&h);
    return rings;
}

bool point_allowed(const VisibilityDomain& dom, const Point& p) {
    PolygonWithHoles probe{dom.poly.outer, {}};
    if (dom.outside) return classify_point(probe, p) != Region::Interior;
    return classify_point(dom.poly, p) != Region::Exterior;
}

}  // namespace

bool segment_passable(const VisibilityDomain& dom, const Point& p, const Point& q) {
    if (p == q) return point_allowed(dom, p);
    const Point d = q - p;
    const Scalar dd = dot(d, d);
    std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
    auto param_if_on = [&](const Point& x) {
        if (!on_segment(x, p, q)) return;
        cuts.push_back(dot(x - p, d) / dd);
    };
    const Segment pq{0, p, q};
    for (const auto* ring : domain_rings(dom))
        for (size_t i = 0; i < ring->size(); ++i) {
            const Segment e{1, (*ring)[i], (*ring)[(i + 1) % ring->size()]};
            try {
                if (auto x = seg_intersect(pq, e)) cuts.push_back(dot(*x - p, d) / dd);
            } catch (const Error&) {
                // collinear overlap: cut at whatever endpoints fall inside
                param_if_on(e.p);
                param_if_on(e.q);
            }
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar t = (cuts[i] + cuts[i + 1]) / 2;
        const Point mid{p.x + t * d.x, p.y + t * d.y};
        if (!point_allowed(dom, mid)) return false;
    }
    return true;
}

Geodesic shortest_path(const VisibilityDomain& dom, const Point& from, const Point& to,
                       const std::vector<Point>& extra) {
    require(point_allowed(dom, from) && point_allowed(dom, to), ErrorCode::Precondition,
            "geodesic endpoint outside the domain");
    std::vector<Point> nodes{from, to};
    auto add_node = [&](const Point& p) {
        for (const Point& q : nodes)
            if (q == p) return;
        nodes.push_back(p);
    };
    for (const auto* ring : domain_rings(dom))
        for (const Point& v : *ring) add_node(v);
    for (const Point& p : extra)
        if (point_allowed(dom, p)) add_node(p);

    const int n = (int)nodes.size();
    std::vector<std::vector<char>> vis(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vis[i][j] = vis[j][i] = segment_passable(dom, nodes[i], nodes[j]) ? 1 : 0;

    // O(n^2) Dijkstra with exact length keys; settle order (length, id),
    // parent = the earliest settled node that achieved the final length
    std::vector<PathLength> dist(n);
    std::vector<char> seen(n, 0), done(n, 0);
    std::vector<int> parent(n, -1);
    seen[0] = 1;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (int i = 0; i < n; ++i) {
            if (!seen[i] || done[i]) continue;
            if (v == -1 || compare_lengths(dist[i], dist[v]) < 0) v = i;
        }
        if (v == -1) break;
        done[v] = 1;
        if (v == 1) break;  // target settled
        for (int w = 0; w < n; ++w) {
            if (!vis[v][w] || done[w]) continue;
            const PathLength cand = dist[v].plus_sqrt(squared_dist(nodes[v], nodes[w]));
            if (!seen[w] || compare_lengths(cand, dist[w]) < 0) {
                seen[w] = 1;
                dist[w] = cand;
                parent[w] = v;
            }
        }
    }
    require(done[1], ErrorCode::Internal, "domain is not connected for the geodesic");
    Geodesic g;
    g.length = dist[1];
    std::vector<Point> rev;
    for (int v = 1; v != -1; v = parent[v]) rev.push_back(nodes[v]);
    g.points.assign(rev.rbegin(), rev.rend());
    return g;
}

}  // namespace segcells
