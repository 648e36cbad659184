#pragma once

// Small hand-checkable graphs shared by the unit and acceptance tests.
// Weights are tenths of a minute (10 = one minute).

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kct/graph.hpp"

namespace fixtures {

inline std::vector<kct::Vertex> label_vertices(int n, const std::string& prefix = "v") {
    std::vector<kct::Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        vs[static_cast<std::size_t>(i)].id = i;
        vs[static_cast<std::size_t>(i)].label = prefix + std::to_string(i);
    }
    return vs;
}

inline kct::RoadGraph from_edges(int n, const std::vector<kct::Edge>& es,
                                 const std::string& prefix = "v") {
    return kct::RoadGraph::build(label_vertices(n, prefix), es);
}

// unit path v0 - v1 - ... - v{n-1}
inline kct::RoadGraph path_graph(int n, kct::dist_t w = 10) {
    std::vector<kct::Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, w});
    return from_edges(n, es);
}

inline kct::RoadGraph p5() { return path_graph(5); }
inline kct::RoadGraph p4() { return path_graph(4); }

// weighted path v0 -1- v1 -5- v2 (minutes)
inline kct::RoadGraph p3w() { return from_edges(3, {{0, 1, 10}, {1, 2, 50}}); }

// triangle a -1- b -2- c, a -3- c
inline kct::RoadGraph k3() {
    std::vector<kct::Vertex> vs(3);
    vs[0].id = 0;
    vs[0].label = "a";
    vs[1].id = 1;
    vs[1].label = "b";
    vs[2].id = 2;
    vs[2].label = "c";
    return kct::RoadGraph::build(std::move(vs), std::vector<kct::Edge>{{0, 1, 10}, {1, 2, 20}, {0, 2, 30}});
}

// hub s with 4 unit legs
inline kct::RoadGraph star5() {
    std::vector<kct::Vertex> vs(5);
    vs[0].id = 0;
    vs[0].label = "s";
    for (int i = 1; i < 5; ++i) {
        vs[static_cast<std::size_t>(i)].id = i;
        vs[static_cast<std::size_t>(i)].label = "l" + std::to_string(i);
    }
    return kct::RoadGraph::build(std::move(vs),
                                 std::vector<kct::Edge>{{0, 1, 10}, {0, 2, 10}, {0, 3, 10}, {0, 4, 10}});
}

// 3x3 unit grid, row-major ids, planar coords (col, row) in km
inline kct::RoadGraph grid3() {
    std::vector<kct::Edge> es;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const int v = 3 * r + c;
            if (c < 2) es.push_back({v, v + 1, 10});
            if (r < 2) es.push_back({v, v + 3, 10});
        }
    kct::RoadGraph g = from_edges(9, es);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            g.set_planar(3 * r + c, {static_cast<double>(c), static_cast<double>(r)});
    return g;
}

// random connected graph: attachment tree plus extra edges, weights in
// [10, 10 + wspan) tenths
inline kct::RoadGraph random_connected(std::mt19937_64& rng, int n, int extra_edges,
                                       kct::dist_t wspan = 90) {
    std::set<std::pair<int, int>> chosen;
    for (int i = 1; i < n; ++i) {
        const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        chosen.insert({p, i});
    }
    for (int t = 0; t < extra_edges && n >= 2; ++t) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) v = (v + 1) % n;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<kct::Edge> es;
    for (const auto& [u, v] : chosen)
        es.push_back({u, v, 10 + static_cast<kct::dist_t>(rng() % static_cast<std::uint64_t>(wspan))});
    return from_edges(n, es);
}

// uniform points in a side x side square
inline std::vector<kct::PlanarPoint> random_points(std::mt19937_64& rng, int n,
                                                   double side = 100.0) {
    std::vector<kct::PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> u(0.0, side);
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return pts;
}

}  // namespace fixtures
