#include "kct/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace kct {

RoadGraph RoadGraph::build(std::vector<Vertex> vertices, std::span<const Edge> edges) {
    RoadGraph g;
    g.vertices_ = std::move(vertices);
    const auto n = g.vertices_.size();
    for (std::size_t i = 0; i < n; ++i) g.vertices_[i].id = static_cast<VertexId>(i);

    // collapse parallel edges to the minimum weight
    std::map<std::pair<VertexId, VertexId>, dist_t> unique;
    for (const Edge& e : edges) {
        if (e.u < 0 || static_cast<std::size_t>(e.u) >= n || e.v < 0 ||
            static_cast<std::size_t>(e.v) >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.weight <= 0)
            throw InputError("nonpositive edge weight on (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ")");
        const auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = unique.emplace(key, e.weight);
        if (!inserted) it->second = std::min(it->second, e.weight);
    }

    g.adj_.assign(n, {});
    for (const auto& [key, w] : unique) {
        g.adj_[static_cast<std::size_t>(key.first)].push_back({key.second, w});
        g.adj_[static_cast<std::size_t>(key.second)].push_back({key.first, w});
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    g.edge_count_ = unique.size();
    return g;
}

std::vector<Edge> RoadGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (const Neighbor& nb : adj_[u])
            if (static_cast<VertexId>(u) < nb.to)
                out.push_back({static_cast<VertexId>(u), nb.to, nb.weight});
    return out;
}

namespace {

std::vector<char> reach_mask(const RoadGraph& g, VertexId from) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    seen[static_cast<std::size_t>(from)] = 1;
    q.push(from);
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (const Neighbor& nb : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(nb.to)]) {
                seen[static_cast<std::size_t>(nb.to)] = 1;
                q.push(nb.to);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_connected(const RoadGraph& g) {
    return !find_unreachable(g, 0).has_value();
}

std::optional<VertexId> find_unreachable(const RoadGraph& g, VertexId from) {
    if (g.vertex_count() == 0) return std::nullopt;
    const auto seen = reach_mask(g, from);
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v]) return static_cast<VertexId>(v);
    return std::nullopt;
}

std::vector<VertexId> reachable_from(const RoadGraph& g, VertexId from) {
    g.check_vertex(from);
    const auto seen = reach_mask(g, from);
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

InducedSubgraph induced_subgraph(const RoadGraph& g, std::span<const VertexId> members) {
    if (members.empty()) throw InputError("induced subgraph on an empty vertex set");

    std::vector<VertexId> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate vertex in induced subgraph member set");

    std::vector<VertexId> to_dense(g.vertex_count(), -1);
    std::vector<Vertex> verts;
    verts.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        g.check_vertex(sorted[i]);
        to_dense[static_cast<std::size_t>(sorted[i])] = static_cast<VertexId>(i);
        verts.push_back(g.vertex(sorted[i]));
    }

    std::vector<Edge> edges;
    for (const VertexId u : sorted)
        for (const Neighbor& nb : g.neighbors(u))
            if (u < nb.to && to_dense[static_cast<std::size_t>(nb.to)] >= 0)
                edges.push_back({to_dense[static_cast<std::size_t>(u)],
                                 to_dense[static_cast<std::size_t>(nb.to)], nb.weight});

    InducedSubgraph out;
    out.graph = RoadGraph::build(std::move(verts), edges);
    out.to_parent = std::move(sorted);
    return out;
}

std::vector<VertexId> n_hop_neighborhood(const RoadGraph& g, VertexId v, int hops) {
    g.check_vertex(v);
    if (hops < 0) throw InputError("negative hop count");
    std::vector<int> depth(g.vertex_count(), -1);
    std::queue<VertexId> q;
    depth[static_cast<std::size_t>(v)] = 0;
    q.push(v);
    std::vector<VertexId> out{v};
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        if (depth[static_cast<std::size_t>(u)] == hops) continue;
        for (const Neighbor& nb : g.neighbors(u)) {
            if (depth[static_cast<std::size_t>(nb.to)] < 0) {
                depth[static_cast<std::size_t>(nb.to)] = depth[static_cast<std::size_t>(u)] + 1;
                out.push_back(nb.to);
                q.push(nb.to);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kct
