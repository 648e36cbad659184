#include "kct/dist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <utility>

namespace kct {

std::vector<dist_t> sssp(const RoadGraph& g, VertexId source) {
    g.check_vertex(source);
    const std::size_t n = g.vertex_count();
    std::vector<dist_t> dist(n, kUnreachable);
    using Item = std::pair<dist_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(u)]) continue;
        for (const Neighbor& nb : g.neighbors(u)) {
            const dist_t nd = d + nb.weight;
            if (nd < dist[static_cast<std::size_t>(nb.to)]) {
                dist[static_cast<std::size_t>(nb.to)] = nd;
                heap.push({nd, nb.to});
            }
        }
    }
    return dist;
}

namespace {

void fill_row(const RoadGraph& g, VertexId source, std::span<dist_t> out) {
    const auto d = sssp(g, source);
    std::copy(d.begin(), d.end(), out.begin());
}

void check_finite(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (dm.at(0, static_cast<VertexId>(v)) == kUnreachable)
            throw MetricError("graph is disconnected: no path between vertices 0 and " +
                              std::to_string(v));
    }
}

}  // namespace

DistanceMatrix all_pairs(const RoadGraph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix dm(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        fill_row(g, static_cast<VertexId>(i), dm.row_mut(static_cast<VertexId>(i)));
    check_finite(dm);
    return dm;
}

DistanceMatrix all_pairs_serial(const RoadGraph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix dm(n);
    for (std::size_t i = 0; i < n; ++i)
        fill_row(g, static_cast<VertexId>(i), dm.row_mut(static_cast<VertexId>(i)));
    check_finite(dm);
    return dm;
}

dist_t eccentricity(const DistanceMatrix& dm, VertexId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= dm.size())
        throw InputError("unknown vertex id " + std::to_string(v));
    dist_t e = 0;
    for (const dist_t d : dm.row(v)) e = std::max(e, d);
    return e;
}

MetricSummary metric_summary(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    MetricSummary ms;
    std::vector<dist_t> ecc(n, 0), total(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const dist_t d : dm.row(static_cast<VertexId>(v))) {
            ecc[v] = std::max(ecc[v], d);
            total[v] += d;
        }
    }
    ms.radius = *std::min_element(ecc.begin(), ecc.end());
    ms.diameter = *std::max_element(ecc.begin(), ecc.end());
    const dist_t min_total = *std::min_element(total.begin(), total.end());
    for (std::size_t v = 0; v < n; ++v) {
        if (ecc[v] == ms.radius) ms.center.push_back(static_cast<VertexId>(v));
        if (ecc[v] == ms.diameter) ms.periphery.push_back(static_cast<VertexId>(v));
        if (total[v] == min_total) ms.median.push_back(static_cast<VertexId>(v));
    }
    return ms;
}

StatsReport graph_stats(const RoadGraph& g, const DistanceMatrix& dm) {
    StatsReport r;
    const auto edges = g.edges();

    if (!edges.empty()) {
        dist_t sum = 0, sq_sum_scale = 0;
        r.edge_weight_min = edges.front().weight;
        r.edge_weight_max = edges.front().weight;
        for (const Edge& e : edges) {
            r.edge_weight_min = std::min(r.edge_weight_min, e.weight);
            r.edge_weight_max = std::max(r.edge_weight_max, e.weight);
            sum += e.weight;
            sq_sum_scale += e.weight * e.weight;
        }
        const double m = static_cast<double>(edges.size());
        const double mean = static_cast<double>(sum) / m;
        const double var = static_cast<double>(sq_sum_scale) / m - mean * mean;
        r.edge_weight_mean_minutes = mean / 10.0;
        r.edge_weight_stddev_minutes = std::sqrt(std::max(0.0, var)) / 10.0;
    }

    int max_deg = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        max_deg = std::max(max_deg, g.degree(static_cast<VertexId>(v)));
    r.degree_histogram.assign(static_cast<std::size_t>(max_deg) + 1, 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        ++r.degree_histogram[static_cast<std::size_t>(g.degree(static_cast<VertexId>(v)))];

    const std::size_t n = dm.size();
    if (n >= 2) {
        dist_t sum = 0;
        long double sq_sum = 0.0L;
        std::map<long long, long long> freq;  // whole minutes -> count
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const dist_t d = dm.at(static_cast<VertexId>(i), static_cast<VertexId>(j));
                sum += d;
                sq_sum += static_cast<long double>(d) * static_cast<long double>(d);
                ++freq[(d + 5) / 10];
                ++count;
            }
        }
        const double m = static_cast<double>(count);
        const double mean = static_cast<double>(sum) / m;
        const double var = static_cast<double>(sq_sum / m) - mean * mean;
        r.path_weight_mean_minutes = mean / 10.0;
        r.path_weight_stddev_minutes = std::sqrt(std::max(0.0, var)) / 10.0;
        long long best_count = 0;
        for (const auto& [minutes, c] : freq) {
            if (c > best_count) {
                best_count = c;
                r.path_weight_mode_minutes = minutes;
            }
        }
    }
    return r;
}

}  // namespace kct
