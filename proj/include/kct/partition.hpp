#pragma once

#include <span>
#include <vector>

#include "kct/dist.hpp"
#include "kct/graph.hpp"

namespace kct {

// Territorial unit: a vertex set with one distinguished center inside it.
struct CenteredTU {
    std::vector<VertexId> members;  // sorted ascending, nonempty
    VertexId center = 0;            // element of members
};

struct CenteredPartition {
    std::vector<CenteredTU> tus;   // sorted by center id
    std::vector<dist_t> radii;     // global-metric radius per TU
    dist_t partition_radius = 0;   // max over radii
    std::vector<int> tu_of;        // vertex id -> index into tus
};

// Assigns every vertex to its nearest center under the global metric;
// ties go to the center with the smallest id, so each cell induces a
// connected subgraph. Throws InputError on an empty or invalid center set.
CenteredPartition voronoi_partition(const DistanceMatrix& dm, std::span<const VertexId> centers);

// Builds a partition from explicit TUs, validating that member sets are
// disjoint, cover all vertices, and contain their centers.
CenteredPartition centered_partition(const DistanceMatrix& dm, std::vector<CenteredTU> tus);

// Max global-metric distance from the TU center to any member.
dist_t tu_radius(const DistanceMatrix& dm, const CenteredTU& tu);

struct RadiusStats {
    dist_t min = 0;
    dist_t max = 0;
    double mean_minutes = 0.0;
    double stddev_minutes = 0.0;
};
RadiusStats radius_stats(const CenteredPartition& p);

struct ConstraintReport {
    std::vector<bool> tu_ok;  // per TU
    bool all_ok = true;
};

// Tests, per TU, whether its center belongs to the center vertex set of
// the subgraph induced by its members. A disconnected induced subgraph
// fails the check (reported, not thrown).
ConstraintReport check_center_constraint(const RoadGraph& g, const CenteredPartition& p);

// For each Voronoi cell of `centers`: keeps the cell's center if it
// already lies in the induced subgraph's center set, otherwise replaces
// it with the smallest-id member of that set. Cells are computed once
// from the input set and not refreshed between shifts. If a cell's
// induced subgraph is disconnected, the shift is confined to the
// component containing the current center.
std::vector<VertexId> shift_centers(const RoadGraph& g, const DistanceMatrix& dm,
                                    std::span<const VertexId> centers);

struct FixpointResult {
    std::vector<VertexId> centers;      // latest set attaining the minimal radius
    CenteredPartition partition;        // its Voronoi partition
    std::vector<dist_t> radius_trace;   // input radius, then one entry per recomputation
    bool converged = false;             // center set repeated before the cap
    int iterations = 0;                 // shift+recompute rounds performed
};

// Alternates shift_centers and voronoi_partition until the center set
// repeats or the iteration cap is hit.
FixpointResult shift_recompute_fixpoint(const RoadGraph& g, const DistanceMatrix& dm,
                                        std::span<const VertexId> centers, int max_iters = 100);

}  // namespace kct
