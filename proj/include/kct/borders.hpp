#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kct/geo.hpp"
#include "kct/graph.hpp"
#include "kct/partition.hpp"

namespace kct {

// Road edge whose endpoints fall in different territorial units.
struct CrossEdge {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    dist_t weight = 0;
    int tu_u = 0;  // TU index of u
    int tu_v = 0;  // TU index of v
};

// Exactly the edges straddling a TU boundary, sorted by (u, v).
std::vector<CrossEdge> cross_edges(const RoadGraph& g, const CenteredPartition& p);

// Planar midpoints of the given edges. Throws InputError when an endpoint
// has no planar coordinates.
std::vector<PlanarPoint> midpoints(std::span<const CrossEdge> edges, const RoadGraph& g);

struct GeomGraph {
    std::vector<PlanarPoint> points;
    std::vector<std::pair<int, int>> segments;  // index pairs, first < second
};

// Relative neighborhood graph: (p,q) is an edge iff no third point r has
// max(|pr|, |qr|) < |pq|. Strict inequality, so cocircular ties keep the
// edge. Cubic scan; point counts here are border-sized. Assumes distinct
// points.
GeomGraph rng(std::span<const PlanarPoint> points);

// Minimum spanning tree of the complete Euclidean graph. Length ties are
// broken by lexicographic index pairs.
GeomGraph euclidean_mst(std::span<const PlanarPoint> points);

enum class BorderMethod { RNG, MST };

struct BorderPair {
    int tu_a = 0;  // tu_a < tu_b
    int tu_b = 0;
    GeomGraph sketch;  // over the pair's deduplicated midpoints
};

struct BorderSketch {
    BorderMethod method = BorderMethod::RNG;
    std::vector<BorderPair> pairs;  // sorted by (tu_a, tu_b)
};

// Groups cross-edges per unordered TU pair, coalesces duplicate midpoints,
// and connects each group with the chosen geometric graph.
BorderSketch border_sketch(const RoadGraph& g, const CenteredPartition& p, BorderMethod method);

}  // namespace kct
