#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kct/geo.hpp"
#include "kct/types.hpp"

namespace kct {

struct Vertex {
    VertexId id = 0;
    std::string label;
    std::optional<GeoPoint> geo;
    std::optional<PlanarPoint> planar;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    dist_t weight = 0;  // tenths of a minute, > 0
};

struct Neighbor {
    VertexId to = 0;
    dist_t weight = 0;
};

// Undirected edge-weighted graph. Adjacency lists are kept sorted by
// neighbor id; parallel edges are collapsed to the minimum weight at
// build time. Structure is immutable after build; only vertex
// coordinates may be attached later (projection output).
class RoadGraph {
public:
    RoadGraph() = default;

    // Throws InputError on self-loops, nonpositive weights, or ids
    // outside [0, |V|). Vertex ids are renumbered to match positions.
    static RoadGraph build(std::vector<Vertex> vertices, std::span<const Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const Vertex& vertex(VertexId v) const {
        check_vertex(v);
        return vertices_[static_cast<std::size_t>(v)];
    }
    std::span<const Neighbor> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    void set_planar(VertexId v, PlanarPoint p) {
        check_vertex(v);
        vertices_[static_cast<std::size_t>(v)].planar = p;
    }

    // Unique edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

    void check_vertex(VertexId v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
            throw InputError("unknown vertex id " + std::to_string(v));
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Neighbor>> adj_;
    std::size_t edge_count_ = 0;
};

bool is_connected(const RoadGraph& g);

// First vertex (smallest id) unreachable from `from`, if any.
std::optional<VertexId> find_unreachable(const RoadGraph& g, VertexId from);

// Sorted vertex ids of the connected component containing `from`.
std::vector<VertexId> reachable_from(const RoadGraph& g, VertexId from);

struct InducedSubgraph {
    RoadGraph graph;
    std::vector<VertexId> to_parent;  // dense id in `graph` -> id in the parent
};

// Subgraph on `members`: keeps exactly the edges with both endpoints in
// the set. May be disconnected; callers check. Throws InputError on an
// empty or invalid member set.
InducedSubgraph induced_subgraph(const RoadGraph& g, std::span<const VertexId> members);

// Vertices reachable from v in at most `hops` edges, weights ignored,
// v included. Sorted ascending.
std::vector<VertexId> n_hop_neighborhood(const RoadGraph& g, VertexId v, int hops);

}  // namespace kct
