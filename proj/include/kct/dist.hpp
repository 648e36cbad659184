#pragma once

#include <span>
#include <vector>

#include "kct/graph.hpp"

namespace kct {

// Dense symmetric matrix of exact shortest-path weights (tenths of a
// minute). Immutable after construction; safe to share across threads.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const { return n_; }
    dist_t at(VertexId u, VertexId v) const {
        return cells_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    }
    std::span<const dist_t> row(VertexId u) const {
        return {cells_.data() + static_cast<std::size_t>(u) * n_, n_};
    }
    std::span<dist_t> row_mut(VertexId u) {
        return {cells_.data() + static_cast<std::size_t>(u) * n_, n_};
    }

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<dist_t> cells_;
};

// Exact minimal path weight from source to every vertex (Dijkstra).
// Unreachable vertices get kUnreachable.
std::vector<dist_t> sssp(const RoadGraph& g, VertexId source);

// All-pairs matrix: row i equals sssp(g, i). Rows are independent, so the
// parallel kernel is bitwise identical to the serial one. Throws
// MetricError naming an unreachable pair on a disconnected graph.
DistanceMatrix all_pairs(const RoadGraph& g);         // OpenMP over rows
DistanceMatrix all_pairs_serial(const RoadGraph& g);  // reference kernel

dist_t eccentricity(const DistanceMatrix& dm, VertexId v);

struct MetricSummary {
    dist_t radius = 0;
    dist_t diameter = 0;
    std::vector<VertexId> center;     // all vertices attaining the radius
    std::vector<VertexId> periphery;  // all vertices attaining the diameter
    std::vector<VertexId> median;     // all vertices of minimal total distance
};
MetricSummary metric_summary(const DistanceMatrix& dm);

struct StatsReport {
    dist_t edge_weight_min = 0;
    dist_t edge_weight_max = 0;
    double edge_weight_mean_minutes = 0.0;
    double edge_weight_stddev_minutes = 0.0;
    std::vector<long long> degree_histogram;  // index = degree, sums to |V|
    double path_weight_mean_minutes = 0.0;
    double path_weight_stddev_minutes = 0.0;
    // most frequent shortest-path weight after rounding half-up to whole
    // minutes; smallest value on frequency ties
    long long path_weight_mode_minutes = 0;
};
StatsReport graph_stats(const RoadGraph& g, const DistanceMatrix& dm);

}  // namespace kct
