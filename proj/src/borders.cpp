#include "kct/borders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

namespace kct {

namespace {

double dist_sq(const PlanarPoint& a, const PlanarPoint& b) {
    const double dx = a.x_km - b.x_km;
    const double dy = a.y_km - b.y_km;
    return dx * dx + dy * dy;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<CrossEdge> cross_edges(const RoadGraph& g, const CenteredPartition& p) {
    std::vector<CrossEdge> out;
    for (const auto& e : g.edges()) {  // edges() is sorted by (u, v) with u < v
        const int tu = p.tu_of[e.u];
        const int tv = p.tu_of[e.v];
        if (tu != tv) out.push_back({e.u, e.v, e.weight, tu, tv});
    }
    return out;
}

std::vector<PlanarPoint> midpoints(std::span<const CrossEdge> edges, const RoadGraph& g) {
    std::vector<PlanarPoint> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        const auto& pu = g.vertex(e.u).planar;
        const auto& pv = g.vertex(e.v).planar;
        if (!pu || !pv)
            throw InputError("no planar coordinates for cross-edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + "; run the projection first");
        out.push_back({(pu->x_km + pv->x_km) / 2.0, (pu->y_km + pv->y_km) / 2.0});
    }
    return out;
}

GeomGraph rng(std::span<const PlanarPoint> points) {
    if (points.empty()) throw InputError("no points for the relative neighborhood graph");
    GeomGraph gg;
    gg.points.assign(points.begin(), points.end());
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dij = dist_sq(points[i], points[j]);
            bool blocked = false;
            for (int r = 0; r < n && !blocked; ++r) {
                if (r == i || r == j) continue;
                blocked = std::max(dist_sq(points[i], points[r]), dist_sq(points[j], points[r])) <
                          dij;
            }
            if (!blocked) gg.segments.emplace_back(i, j);
        }
    }
    return gg;
}

GeomGraph euclidean_mst(std::span<const PlanarPoint> points) {
    if (points.empty()) throw InputError("no points for the spanning tree");
    GeomGraph gg;
    gg.points.assign(points.begin(), points.end());
    const int n = static_cast<int>(points.size());
    std::vector<std::tuple<double, int, int>> cand;
    cand.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cand.emplace_back(dist_sq(points[i], points[j]), i, j);
    std::sort(cand.begin(), cand.end());
    DisjointSet ds(n);
    for (const auto& [d, i, j] : cand) {
        (void)d;
        if (ds.unite(i, j)) {
            gg.segments.emplace_back(i, j);
            if (static_cast<int>(gg.segments.size()) == n - 1) break;
        }
    }
    return gg;
}

BorderSketch border_sketch(const RoadGraph& g, const CenteredPartition& p, BorderMethod method) {
    const auto ce = cross_edges(g, p);
    const auto mids = midpoints(ce, g);
    std::map<std::pair<int, int>, std::vector<PlanarPoint>> groups;
    for (std::size_t i = 0; i < ce.size(); ++i) {
        auto key = std::minmax(ce[i].tu_u, ce[i].tu_v);
        auto& pts = groups[{key.first, key.second}];
        const auto same = [&](const PlanarPoint& q) {
            return q.x_km == mids[i].x_km && q.y_km == mids[i].y_km;
        };
        if (std::find_if(pts.begin(), pts.end(), same) == pts.end()) pts.push_back(mids[i]);
    }
    BorderSketch sk;
    sk.method = method;
    for (auto& [key, pts] : groups) {
        BorderPair bp;
        bp.tu_a = key.first;
        bp.tu_b = key.second;
        bp.sketch = method == BorderMethod::RNG ? rng(pts) : euclidean_mst(pts);
        sk.pairs.push_back(std::move(bp));
    }
    return sk;
}

}  // namespace kct
